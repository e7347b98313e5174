#include "liegrad/types.hpp"

#include <algorithm>
#include <cctype>

namespace liegrad {

bool valid_rank(Family family, int rank) {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 3;
    case Family::D: return rank >= 4;
    case Family::E: return rank == 6 || rank == 7 || rank == 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

SimpleLieType make_type(Family family, int rank) {
  if (!valid_rank(family, rank))
    throw input_error("invalid rank " + std::to_string(rank) + " for family " +
                      std::string(1, static_cast<char>(family)));
  return SimpleLieType{family, rank};
}

SimpleLieType parse_type(const std::string& s) {
  if (s.size() < 2 || s.size() > 7) throw input_error("cannot parse Lie type '" + s + "'");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  std::string letters = "ABCDEFG";
  if (letters.find(f) == std::string::npos)
    throw input_error("unknown family letter in '" + s + "'");
  for (std::size_t p = 1; p < s.size(); ++p)
    if (!std::isdigit(static_cast<unsigned char>(s[p])))
      throw input_error("cannot parse Lie type '" + s + "'");
  long rank = std::stol(s.substr(1));
  if (rank <= 0 || rank > 1000) throw input_error("rank out of range in '" + s + "'");
  return make_type(static_cast<Family>(f), static_cast<int>(rank));
}

std::string to_string(SimpleLieType t) {
  return std::string(1, static_cast<char>(t.family)) + std::to_string(t.rank);
}

long long algebra_dim(SimpleLieType t) {
  long long n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 2);
    case Family::B: return n * (2 * n + 1);
    case Family::C: return n * (2 * n + 1);
    case Family::D: return n * (2 * n - 1);
    case Family::E: return t.rank == 6 ? 78 : t.rank == 7 ? 133 : 248;
    case Family::F: return 52;
    case Family::G: return 14;
  }
  throw internal_error("algebra_dim: bad family");
}

long long positive_root_count(SimpleLieType t) {
  long long n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B: return n * n;
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return t.rank == 6 ? 36 : t.rank == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  throw internal_error("positive_root_count: bad family");
}

std::string to_string(const Root& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(r[i]);
  }
  return s + ")";
}

Sigma make_sigma(std::vector<int> indices, int rank) {
  if (indices.empty()) throw input_error("sigma must be nonempty");
  std::sort(indices.begin(), indices.end());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 1 || indices[i] > rank)
      throw input_error("sigma index " + std::to_string(indices[i]) + " out of range 1.." +
                        std::to_string(rank));
    if (i && indices[i] == indices[i - 1])
      throw input_error("duplicate sigma index " + std::to_string(indices[i]));
  }
  return Sigma{std::move(indices)};
}

std::string to_string(const Sigma& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.indices.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.indices[i]);
  }
  return out + "}";
}

}  // namespace liegrad
