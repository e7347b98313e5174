#pragma once

#include "liegrad/grading.hpp"

namespace liegrad {

// The reductive degree-0 part: a center of dimension |sigma| plus the simple
// factors read off the Dynkin diagram with sigma's nodes deleted.
struct ReductiveDescription {
  int center_dim = 0;
  std::vector<SimpleLieType> factors;  // family ascending, rank descending
  long long total_dim = 0;
};

// Classifies a connected induced subdiagram of one of the nine full diagrams.
// Canonical labels for the low-rank coincidences: a single node is A1, a two-node
// double edge is B2. Throws internal_error on shapes no node deletion can produce.
SimpleLieType classify_component(const DynkinDiagram& sub);

ReductiveDescription levi_structure(SimpleLieType t, const Sigma& sigma);

// center_dim plus the sum of the factor dimensions.
long long reductive_dimension(const ReductiveDescription& desc);

std::string to_string(const ReductiveDescription& desc);  // "C^2+A2+A1"

}  // namespace liegrad
