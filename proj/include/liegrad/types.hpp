#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace liegrad {

// Thrown on malformed user input (bad type string, out-of-range index, ...).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an internal cross-check fails; must be unreachable for legal inputs.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// One of the nine complex simple Lie algebras, Bourbaki numbering throughout.
// Rank constraints: A>=1, B>=2, C>=3, D>=4, E in {6,7,8}, F=4, G=2.
struct SimpleLieType {
  Family family;
  int rank;
  auto operator<=>(const SimpleLieType&) const = default;
};

bool valid_rank(Family family, int rank);
SimpleLieType make_type(Family family, int rank);
SimpleLieType parse_type(const std::string& s);  // "A5", "E8", "G2", ...
std::string to_string(SimpleLieType t);

long long algebra_dim(SimpleLieType t);
long long positive_root_count(SimpleLieType t);

// A root in simple-root coordinates: coeffs[i] is the coefficient of alpha_{i+1}.
// All nonzero entries of a root share one sign; the zero vector is never a root.
// Lexicographic vector comparison is the deterministic ordering used everywhere.
using Root = std::vector<int>;

std::string to_string(const Root& r);  // "(1,2,0)"

// Nonempty set of simple-root indices, 1-based, stored ascending without duplicates.
struct Sigma {
  std::vector<int> indices;
  auto operator<=>(const Sigma&) const = default;
};

// Sorts, validates bounds and rejects duplicates/empty input.
Sigma make_sigma(std::vector<int> indices, int rank);
std::string to_string(const Sigma& s);  // "{1,3}"

}  // namespace liegrad
