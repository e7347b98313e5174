#pragma once

#include <array>

#include "liegrad/rootsys.hpp"

namespace liegrad {

// Dimensions of the negative part of the grading cut out by sigma.
// neg_dims[i-1] = dim n_{-i}; the positive side mirrors it by the duality pairing.
struct GradingDims {
  SimpleLieType type;
  Sigma sigma;
  int k = 0;
  std::vector<long long> neg_dims;
  long long dim_n0 = 0;
  long long ht0_root_count = 0;
};

// The nonempty subsets of simple roots giving the highest root sigma-height k,
// in lexicographic order of their index sequences. No automorphism dedupe.
std::vector<Sigma> enumerate_sigmas(const RootSystem& rs, int k);

// One orbit of sigmas under the diagram automorphism group.
struct SigmaClass {
  std::vector<Sigma> members;  // sorted; front() is the lexicographically least
  const Sigma& representative() const { return members.front(); }
};

// Partition into orbits, classes ordered by first appearance in the input.
std::vector<SigmaClass> dedupe_sigmas(const RootSystem& rs, const std::vector<Sigma>& sigmas);

// Counts positive roots by sigma-height. Requires sigma_height(theta, sigma) == k.
GradingDims graded_dimensions(const RootSystem& rs, const Sigma& sigma, int k);

using DimTriple = std::array<long long, 3>;  // (dim n_{-1}, dim n_{-2}, dim n_{-3})

// Closed forms for the classical |3|-gradings. `published` evaluates the
// literature's formulas verbatim; `corrected` applies the two known depth-2 fixes
//   B_n: dim n_{-2} = (2n+1-2i) + (i-1)(i-2)/2
//   C_n: dim n_{-2} = i(n-i)
// and always agrees with graded_dimensions. For A and D both triples coincide.
struct ClosedFormDims {
  DimTriple published;
  DimTriple corrected;
};

// sigma must match the family's |3|-pattern (A: {i,j,k}; B: {1,i}; C: {i,n};
// D: {1,i}, {i,n}, {i,n-1} with 2<=i<=n-2, or {1,n-1,n}).
ClosedFormDims closed_form_dims(SimpleLieType t, const Sigma& sigma);

// True iff every positive root of sigma-height h (2 <= h <= k) splits as beta + gamma
// with beta of height 1 and gamma of height h-1, both positive roots. This is what
// makes the degree -1 piece generate the whole negative part.
bool generation_check(const RootSystem& rs, const Sigma& sigma, int k);

}  // namespace liegrad
