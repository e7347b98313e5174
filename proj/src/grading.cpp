#include "liegrad/grading.hpp"

#include <algorithm>
#include <map>

namespace liegrad {

std::vector<Sigma> enumerate_sigmas(const RootSystem& rs, int k) {
  if (k < 1) throw input_error("k must be >= 1");
  const Root& theta = rs.highest_root;
  int n = rs.rank();
  std::vector<Sigma> out;
  std::vector<int> cur;
  // Every coefficient of theta is >= 1, so a qualifying subset has at most k
  // elements; ascending recursion emits index sequences in lexicographic order.
  auto rec = [&](auto&& self, int next, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(Sigma{cur});
      return;
    }
    for (int idx = next; idx <= n; ++idx) {
      if (theta[idx - 1] > remaining) continue;
      cur.push_back(idx);
      self(self, idx + 1, remaining - theta[idx - 1]);
      cur.pop_back();
    }
  };
  rec(rec, 1, k);
  return out;
}

std::vector<SigmaClass> dedupe_sigmas(const RootSystem& rs, const std::vector<Sigma>& sigmas) {
  auto autos = diagram_automorphisms(dynkin_diagram(rs.type));
  std::map<Sigma, std::size_t> canon_to_class;
  std::vector<SigmaClass> classes;
  for (const Sigma& s : sigmas) {
    Sigma canon = s;
    std::vector<Sigma> orbit;
    for (const auto& perm : autos) {
      Sigma img = apply_permutation(perm, s);
      orbit.push_back(img);
      if (img < canon) canon = img;
    }
    auto [it, fresh] = canon_to_class.try_emplace(canon, classes.size());
    if (fresh) {
      std::sort(orbit.begin(), orbit.end());
      orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
      classes.push_back(SigmaClass{std::move(orbit)});
    }
  }
  return classes;
}

GradingDims graded_dimensions(const RootSystem& rs, const Sigma& sigma, int k) {
  Sigma s = make_sigma(sigma.indices, rs.rank());
  if (k < 1) throw input_error("k must be >= 1");
  if (sigma_height(rs.highest_root, s) != k)
    throw input_error("sigma " + to_string(s) + " gives highest-root height " +
                      std::to_string(sigma_height(rs.highest_root, s)) + ", not " +
                      std::to_string(k));
  GradingDims g;
  g.type = rs.type;
  g.sigma = s;
  g.k = k;
  g.neg_dims.assign(k, 0);
  for (const Root& r : rs.positive_roots) {
    int h = sigma_height(r, s);
    if (h == 0)
      ++g.ht0_root_count;
    else
      ++g.neg_dims[h - 1];
  }
  g.dim_n0 = rs.rank() + 2 * g.ht0_root_count;
  return g;
}

namespace {

DimTriple an_triple(long long n, long long i, long long j, long long k) {
  return {i * (j - i) + (k - j) * (j - i) + (n + 1 - k) * (k - j),
          i * (k - j) + (n + 1 - k) * (j - i), i * (n + 1 - k)};
}

}  // namespace

ClosedFormDims closed_form_dims(SimpleLieType t, const Sigma& sigma) {
  make_type(t.family, t.rank);
  Sigma s = make_sigma(sigma.indices, t.rank);
  const auto& ix = s.indices;
  long long n = t.rank;
  auto bad = [&]() -> input_error {
    return input_error("sigma " + to_string(s) + " does not match the " +
                       std::string(1, static_cast<char>(t.family)) + "-family |3|-pattern");
  };
  switch (t.family) {
    case Family::A: {
      if (ix.size() != 3) throw bad();
      DimTriple d = an_triple(n, ix[0], ix[1], ix[2]);
      return {d, d};
    }
    case Family::B: {
      if (ix.size() != 2 || ix[0] != 1 || ix[1] < 2) throw bad();
      long long i = ix[1];
      DimTriple pub = {(i - 1) * (2 * n + 2 - 2 * i),
                       (i - 1) * (i - 2) / 2 + (i - 1) * (2 * n - 2 * i), i - 1};
      DimTriple cor = pub;
      cor[1] = (2 * n + 1 - 2 * i) + (i - 1) * (i - 2) / 2;
      return {pub, cor};
    }
    case Family::C: {
      if (ix.size() != 2 || ix[1] != n || ix[0] > n - 1) throw bad();
      long long i = ix[0];
      DimTriple pub = {i * (n - i) + (n - i) + (n - i) * (n - i - 1) / 2, (n - i) * (n - i),
                       i + i * (i - 1) / 2};
      DimTriple cor = pub;
      cor[1] = i * (n - i);
      return {pub, cor};
    }
    case Family::D: {
      if (ix.size() == 3) {
        if (ix[0] != 1 || ix[1] != n - 1 || ix[2] != n) throw bad();
        DimTriple d = {3 * (n - 2), 2 + (n - 2) * (n - 3) / 2, n - 2};
        return {d, d};
      }
      if (ix.size() != 2) throw bad();
      if (ix[0] == 1 && ix[1] >= 2 && ix[1] <= n - 2) {
        long long i = ix[1];
        DimTriple d = {(2 * n - 2 * i) * (i - 1) + (i - 1), (i - 1) * (i - 2) / 2 + (2 * n - 2 * i),
                       i - 1};
        return {d, d};
      }
      if ((ix[1] == n || ix[1] == n - 1) && ix[0] >= 2 && ix[0] <= n - 2) {
        long long i = ix[0];
        DimTriple d = {(n - i) * (n - i - 1) / 2 + i * (n - i), i * (n - i), i * (i - 1) / 2};
        return {d, d};
      }
      throw bad();
    }
    default:
      throw input_error("closed forms exist for the classical families only");
  }
}

bool generation_check(const RootSystem& rs, const Sigma& sigma, int k) {
  Sigma s = make_sigma(sigma.indices, rs.rank());
  std::vector<std::vector<Root>> by_height(k + 1);
  for (const Root& r : rs.positive_roots) {
    int h = sigma_height(r, s);
    if (h >= 1 && h <= k) by_height[h].push_back(r);
  }
  for (int h = 2; h <= k; ++h) {
    for (const Root& gamma : by_height[h]) {
      bool split = false;
      for (const Root& beta : by_height[1]) {
        Root rest = gamma;
        bool nonneg = true;
        for (std::size_t c = 0; c < rest.size(); ++c) {
          rest[c] -= beta[c];
          nonneg &= rest[c] >= 0;
        }
        if (nonneg && rs.contains_positive(rest)) {
          split = true;
          break;
        }
      }
      if (!split) return false;
    }
  }
  return true;
}

}  // namespace liegrad
