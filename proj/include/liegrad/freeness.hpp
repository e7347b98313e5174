#pragma once

#include <optional>
#include <utility>

#include "liegrad/levi.hpp"

namespace liegrad {

// 0 if n has a squared prime factor, else (-1)^(number of prime factors).
int mobius(long long n);

// Graded dimensions of the free nilpotent Lie algebra F_{r,k}:
// dims[m-1] = (1/m) sum_{d|m} mobius(d) r^{m/d}.
struct WittDims {
  long long r = 0;
  int k = 0;
  std::vector<long long> dims;
};

WittDims witt_dimensions(long long r, int k);

enum class FreeReason {
  DimsMatch,      // free: full Witt match and degree -1 generates
  DepthMismatch,  // r <= 1 cannot reach depth k >= 2
  WittMismatch,   // some graded dimension differs from the Witt value
  CommutingPair,  // independent degree -1 elements with zero bracket
  NotGenerated,   // degree -1 fails to generate (never observed; guard)
};

std::string to_string(FreeReason r);

struct FreenessVerdict {
  bool free = false;
  long long r = 0;                  // dim n_{-1}, the would-be generator count
  FreeReason reason = FreeReason::WittMismatch;
  std::vector<long long> expected;  // Witt dims for r at the grading's step
  std::optional<std::pair<Root, Root>> witness;  // pair, when that is the reason
};

// First pair (alpha, beta) of distinct height-1 positive roots, in lexicographic
// order, whose sum is not a root; nullopt when every pair brackets nontrivially.
std::optional<std::pair<Root, Root>> commuting_pair(const RootSystem& rs, const Sigma& sigma);

// Decides graded isomorphism with F_{r,k} by dimensions plus generation: the
// universal map F_{r,k} -> n_- is onto once degree -1 generates, and equal
// dimensions in every degree force bijectivity. A commuting pair (k >= 2) is kept
// as an independent obstruction check.
FreenessVerdict freeness_check(const RootSystem& rs, const GradingDims& dims);
FreenessVerdict freeness_check(const GradingDims& dims);  // rebuilds the root system

// Explicit sl_{n+1} certificate for the A_n obstruction: commuting elementary
// matrices E_{p,q}, E_{r,s} inside the degree -1 block pattern of Sigma_{i,j,k}.
struct MatrixCertificate {
  int n = 0, i = 0, j = 0, k = 0;
  std::pair<int, int> x;  // (p, q), p = i+1, q = 1
  std::pair<int, int> y;  // (r, s), r = k+1, s = j+1
  bool case_zero = false;       // p != s and q != r, the vanishing bracket case
  bool in_block = false;        // both positions lie in the degree -1 blocks
  bool product_check = false;   // dense (n+1)x(n+1) multiplication found [x,y] = 0
  bool verified() const { return case_zero && in_block && product_check; }
};

MatrixCertificate an_matrix_certificate(int n, int i, int j, int k);

// All integers r >= 2 with 2r^3 + 3r^2 + r = 3(dim_g - dim_n0); a necessary
// condition for the negative part of a |3|-grading to be F_{r,3}.
std::vector<long long> cubic_filter(long long dim_g, long long dim_n0);

// The D_n |3|-sigma patterns.
enum class DnVariant {
  none,            // families B and C take no variant
  first_and_i,     // {alpha_1, alpha_i}
  i_and_last,      // {alpha_i, alpha_n} (or {alpha_i, alpha_{n-1}})
  first_and_fork,  // {alpha_1, alpha_{n-1}, alpha_n}
};

struct RelationStatus {
  std::string equation;   // in r with n (and i) substituted on the right
  bool holds_at_r = false;   // satisfied by r = dim n_{-1}
  bool solvable = false;     // satisfied by some integer r >= 2
};

// Documents the B/C/D Diophantine relations against the enumeration oracle:
// `printed` evaluates the relation as published, `corrected` the one re-derived
// from the corrected dimension formulas (they coincide for D). The final verdict
// comes from freeness_check, never from the relations.
struct DiophantineReport {
  Family family = Family::B;
  DnVariant variant = DnVariant::none;
  int n = 0, i = 0;
  DimTriple dims{};  // enumeration oracle
  long long r = 0;   // dims[0]
  bool witt_depth2 = false;  // dims[1] == r(r-1)/2
  bool witt_depth3 = false;  // dims[2] == (r^3-r)/3
  RelationStatus printed;
  RelationStatus corrected;
  bool printed_matches_corrected = false;
  bool not_free = false;
};

DiophantineReport diophantine_witness(Family family, DnVariant variant, int n, int i);

struct ScanEntry {
  SimpleLieType type;
  SigmaClass cls;
  GradingDims dims;
  ReductiveDescription levi;
  FreenessVerdict verdict;
  std::optional<std::pair<Root, Root>> pair;  // commuting witness, k >= 2 only
};

// Every deduped sigma-class with highest-root height k, for every listed type,
// in deterministic order. Cross-checks reductive_dimension == dim_n0 throughout.
std::vector<ScanEntry> scan(const std::vector<SimpleLieType>& types, int k);

}  // namespace liegrad
