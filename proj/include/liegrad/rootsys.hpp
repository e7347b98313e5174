#pragma once

#include "liegrad/types.hpp"

namespace liegrad {

struct DynkinEdge {
  int a = 0, b = 0;     // endpoints, a < b
  int multiplicity = 1;  // 1, 2 or 3
  int short_end = 0;     // endpoint carrying the shorter root when multiplicity > 1, else 0
  auto operator<=>(const DynkinEdge&) const = default;
};

struct DynkinDiagram {
  std::vector<int> nodes;         // ascending labels
  std::vector<DynkinEdge> edges;  // sorted by (a, b)
};

DynkinDiagram dynkin_diagram(SimpleLieType t);

// cartan[i][j] = <alpha_{j+1}, alpha_{i+1}^vee>: 2 on the diagonal, {0,-1,-2,-3} off it.
// Derived from the diagram; the row of the short root carries the -2 / -3 entry.
std::vector<std::vector<int>> cartan_matrix(SimpleLieType t);

struct RootSystem {
  SimpleLieType type;
  std::vector<std::vector<int>> cartan;
  std::vector<Root> positive_roots;  // lexicographically sorted
  Root highest_root;

  int rank() const { return type.rank; }
  // Membership among the positive roots only; expects a vector of the right length.
  bool contains_positive(const Root& r) const;
};

// Generates the full positive system from the Cartan matrix by root-string closure,
// then checks the classical count and locates the coefficientwise-maximal root.
RootSystem build_root_system(SimpleLieType t);

const Root& highest_root(const RootSystem& rs);

// True iff coeffs or its negation is a positive root. Wrong length is an input error.
bool is_root(const RootSystem& rs, const Root& coeffs);

// Sum of the root's coefficients over the indices in sigma (may be negative for
// negative roots). Indices must be within the root's length.
int sigma_height(const Root& root, const Sigma& sigma);

// perm[v] = image of node v, perm[0] unused.
using NodePermutation = std::vector<int>;

// All node permutations preserving edges, multiplicities and short ends.
// Group orders for full diagrams: A_n (n>=2): 2; D4: 6; D_n (n>=5): 2; E6: 2; else 1.
std::vector<NodePermutation> diagram_automorphisms(const DynkinDiagram& d);

// Image of a root / a sigma under a node permutation.
Root apply_permutation(const NodePermutation& perm, const Root& r);
Sigma apply_permutation(const NodePermutation& perm, const Sigma& s);

}  // namespace liegrad
