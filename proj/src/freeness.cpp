#include "liegrad/freeness.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace liegrad {

int mobius(long long n) {
  if (n < 1) throw input_error("mobius is defined for n >= 1");
  int primes = 0;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    ++primes;
  }
  if (n > 1) ++primes;
  return primes % 2 ? -1 : 1;
}

namespace {

__int128 ipow(long long base, int exp) {
  __int128 v = 1;
  while (exp-- > 0) v *= base;
  return v;
}

// saturates once the value can no longer fit the exact 64-bit result
constexpr __int128 kWittCap = static_cast<__int128>(1) << 100;

__int128 ipow_capped(long long base, int exp) {
  __int128 v = 1;
  while (exp-- > 0) {
    v *= base;
    if (v > kWittCap) return kWittCap;
  }
  return v;
}

}  // namespace

WittDims witt_dimensions(long long r, int k) {
  if (r < 1 || k < 1) throw input_error("witt_dimensions needs r >= 1 and k >= 1");
  WittDims w{r, k, {}};
  for (int m = 1; m <= k; ++m) {
    __int128 sum = 0;
    for (int d = 1; d <= m; ++d)
      if (m % d == 0) sum += mobius(d) * ipow_capped(r, m / d);
    if (sum % m) throw internal_error("Witt sum not divisible by the degree");
    __int128 dim = sum / m;
    if (dim >= kWittCap / 2 || dim > std::numeric_limits<long long>::max())
      throw input_error("Witt dimension for r=" + std::to_string(r) + " at degree " +
                        std::to_string(m) + " exceeds the exact 64-bit range");
    w.dims.push_back(static_cast<long long>(dim));
  }
  return w;
}

std::string to_string(FreeReason r) {
  switch (r) {
    case FreeReason::DimsMatch: return "dims-match";
    case FreeReason::DepthMismatch: return "depth-mismatch";
    case FreeReason::WittMismatch: return "witt-mismatch";
    case FreeReason::CommutingPair: return "commuting-pair";
    case FreeReason::NotGenerated: return "not-generated";
  }
  return "?";
}

std::optional<std::pair<Root, Root>> commuting_pair(const RootSystem& rs, const Sigma& sigma) {
  Sigma s = make_sigma(sigma.indices, rs.rank());
  std::vector<const Root*> level1;
  for (const Root& r : rs.positive_roots)
    if (sigma_height(r, s) == 1) level1.push_back(&r);  // already in lex order
  Root sum(rs.rank());
  for (std::size_t a = 0; a < level1.size(); ++a) {
    for (std::size_t b = a + 1; b < level1.size(); ++b) {
      for (int c = 0; c < rs.rank(); ++c) sum[c] = (*level1[a])[c] + (*level1[b])[c];
      if (!rs.contains_positive(sum)) return std::make_pair(*level1[a], *level1[b]);
    }
  }
  return std::nullopt;
}

FreenessVerdict freeness_check(const RootSystem& rs, const GradingDims& dims) {
  FreenessVerdict v;
  v.r = dims.neg_dims.at(0);
  try {
    v.expected = witt_dimensions(v.r, dims.k).dims;
  } catch (const input_error&) {
    // a Witt dimension beyond the 64-bit range exceeds every root count
    v.reason = FreeReason::WittMismatch;
    return v;
  }
  if (v.r <= 1 && dims.k >= 2) {
    v.reason = FreeReason::DepthMismatch;
    return v;
  }
  if (dims.neg_dims != v.expected) {
    v.reason = FreeReason::WittMismatch;
    return v;
  }
  if (!generation_check(rs, dims.sigma, dims.k)) {
    v.reason = FreeReason::NotGenerated;
    return v;
  }
  if (dims.k >= 2) {
    // soundness guard: a commuting degree -1 pair rules freeness out regardless
    if (auto pair = commuting_pair(rs, dims.sigma)) {
      v.reason = FreeReason::CommutingPair;
      v.witness = pair;
      return v;
    }
  }
  v.free = true;
  v.reason = FreeReason::DimsMatch;
  return v;
}

FreenessVerdict freeness_check(const GradingDims& dims) {
  return freeness_check(build_root_system(dims.type), dims);
}

MatrixCertificate an_matrix_certificate(int n, int i, int j, int k) {
  if (!(1 <= i && i < j && j < k && k <= n))
    throw input_error("need 1 <= i < j < k <= n");
  MatrixCertificate c;
  c.n = n;
  c.i = i;
  c.j = j;
  c.k = k;
  c.x = {i + 1, 1};  // smallest admissible choices
  c.y = {k + 1, j + 1};
  auto [p, q] = c.x;
  auto [r, s] = c.y;
  c.case_zero = p != s && q != r;
  c.in_block = (i + 1 <= p && p <= j) && (1 <= q && q <= i) && (k + 1 <= r && r <= n + 1) &&
               (j + 1 <= s && s <= k);
  // dense check over (n+1) x (n+1) integer matrices
  int dim = n + 1;
  auto unit = [dim](int row, int col) {
    std::vector<std::vector<long long>> m(dim, std::vector<long long>(dim, 0));
    m[row - 1][col - 1] = 1;
    return m;
  };
  auto mul = [dim](const auto& a, const auto& b) {
    std::vector<std::vector<long long>> m(dim, std::vector<long long>(dim, 0));
    for (int u = 0; u < dim; ++u)
      for (int w = 0; w < dim; ++w)
        if (a[u][w])
          for (int z = 0; z < dim; ++z) m[u][z] += a[u][w] * b[w][z];
    return m;
  };
  auto X = unit(p, q), Y = unit(r, s);
  auto XY = mul(X, Y), YX = mul(Y, X);
  c.product_check = true;
  for (int u = 0; u < dim; ++u)
    for (int w = 0; w < dim; ++w)
      if (XY[u][w] != YX[u][w]) c.product_check = false;
  return c;
}

std::vector<long long> cubic_filter(long long dim_g, long long dim_n0) {
  if (dim_g <= dim_n0) throw input_error("cubic_filter needs dim_g > dim_n0");
  long long target = 3 * (dim_g - dim_n0);
  std::vector<long long> out;
  for (long long r = 2;; ++r) {
    long long v = 2 * r * r * r + 3 * r * r + r;
    if (v > target) break;
    if (v == target) out.push_back(r);
  }
  return out;
}

namespace {

// Relation lhs(r) == rhs; scans integer r >= 2 over a range that safely covers
// every magnitude reachable for the supported ranks (128-bit evaluation).
RelationStatus evaluate_relation(const std::string& text, long long rhs,
                                 const std::function<__int128(long long)>& lhs,
                                 long long r_actual) {
  RelationStatus st;
  st.equation = text + " = " + std::to_string(rhs);
  st.holds_at_r = lhs(r_actual) == static_cast<__int128>(rhs);
  for (long long r = 2; r <= 4000 && !st.solvable; ++r)
    if (lhs(r) == static_cast<__int128>(rhs)) st.solvable = true;
  return st;
}

}  // namespace

DiophantineReport diophantine_witness(Family family, DnVariant variant, int n, int i) {
  DiophantineReport rep;
  rep.family = family;
  rep.variant = variant;
  rep.n = n;
  rep.i = i;

  SimpleLieType t{family, n};
  Sigma sigma{{}};
  switch (family) {
    case Family::B:
      if (variant != DnVariant::none) throw input_error("family B takes no variant");
      if (!(2 <= i && i <= n)) throw input_error("family B needs 2 <= i <= n");
      sigma = make_sigma({1, i}, n);
      break;
    case Family::C:
      if (variant != DnVariant::none) throw input_error("family C takes no variant");
      if (!(1 <= i && i <= n - 1)) throw input_error("family C needs 1 <= i <= n-1");
      sigma = make_sigma({i, n}, n);
      break;
    case Family::D:
      switch (variant) {
        case DnVariant::first_and_i:
          if (!(2 <= i && i <= n - 2)) throw input_error("D {1,i} needs 2 <= i <= n-2");
          sigma = make_sigma({1, i}, n);
          break;
        case DnVariant::i_and_last:
          if (!(2 <= i && i <= n - 2)) throw input_error("D {i,n} needs 2 <= i <= n-2");
          sigma = make_sigma({i, n}, n);
          break;
        case DnVariant::first_and_fork:
          sigma = make_sigma({1, n - 1, n}, n);
          rep.i = 0;
          break;
        default:
          throw input_error("family D needs a variant");
      }
      break;
    default:
      throw input_error("diophantine relations exist for families B, C, D");
  }
  make_type(family, n);

  RootSystem rs = build_root_system(t);
  GradingDims gd = graded_dimensions(rs, sigma, 3);
  rep.dims = {gd.neg_dims[0], gd.neg_dims[1], gd.neg_dims[2]};
  rep.r = rep.dims[0];
  rep.witt_depth2 = rep.dims[1] == rep.r * (rep.r - 1) / 2;
  rep.witt_depth3 = rep.dims[2] == (rep.r * rep.r * rep.r - rep.r) / 3;

  long long N = n, I = i;
  switch (family) {
    case Family::B:
      rep.printed = evaluate_relation(
          "-r^6+2r^4+7r^3+8r^2-16r", 36 * N - 12,
          [](long long r) {
            return -ipow(r, 6) + 2 * ipow(r, 4) + 7 * ipow(r, 3) + 8 * ipow(r, 2) - 16 * r;
          },
          rep.r);
      rep.corrected = evaluate_relation(
          "-r^6+2r^4+15r^3+8r^2-24r+6", 36 * N - 12,
          [](long long r) {
            return -ipow(r, 6) + 2 * ipow(r, 4) + 15 * ipow(r, 3) + 8 * ipow(r, 2) - 24 * r + 6;
          },
          rep.r);
      break;
    case Family::C:
      rep.printed = evaluate_relation("r^2-5r", -2 * (N - I) * (2 * I + 1),
                                      [](long long r) { return static_cast<__int128>(r) * r - 5 * r; }, rep.r);
      rep.corrected = evaluate_relation("r^2-5r", -2 * (N - I) * (N + 1),
                                        [](long long r) { return static_cast<__int128>(r) * r - 5 * r; }, rep.r);
      break;
    case Family::D:
      if (variant == DnVariant::first_and_i) {
        rep.printed = evaluate_relation(
            "r^6-2r^4-15r^3-8r^2+24r", 36 - 36 * N,
            [](long long r) {
              return ipow(r, 6) - 2 * ipow(r, 4) - 15 * ipow(r, 3) - 8 * ipow(r, 2) + 24 * r;
            },
            rep.r);
      } else if (variant == DnVariant::i_and_last) {
        rep.printed = evaluate_relation("r^2-5r", -2 * (N - 1) * (N - I),
                                        [](long long r) { return static_cast<__int128>(r) * r - 5 * r; }, rep.r);
      } else {
        rep.printed = evaluate_relation("r^3-2r", 0,
                                        [](long long r) { return static_cast<__int128>(r) * r * r - 2 * r; }, rep.r);
      }
      rep.corrected = rep.printed;
      break;
    default:
      break;
  }
  rep.printed_matches_corrected = rep.printed.equation == rep.corrected.equation;
  rep.not_free = !freeness_check(rs, gd).free;
  return rep;
}

std::vector<ScanEntry> scan(const std::vector<SimpleLieType>& types, int k) {
  if (types.empty()) throw input_error("scan needs a nonempty type set");
  std::vector<ScanEntry> out;
  for (const auto& t : types) {
    RootSystem rs = build_root_system(t);
    auto classes = dedupe_sigmas(rs, enumerate_sigmas(rs, k));
    for (auto& cls : classes) {
      ScanEntry e;
      e.type = t;
      e.dims = graded_dimensions(rs, cls.representative(), k);
      e.levi = levi_structure(t, cls.representative());
      if (reductive_dimension(e.levi) != e.dims.dim_n0)
        throw internal_error("reductive dimension disagrees with root counting for " +
                             to_string(t) + " " + to_string(cls.representative()));
      e.verdict = freeness_check(rs, e.dims);
      if (k >= 2) {
        e.pair = commuting_pair(rs, cls.representative());
        if (e.verdict.free && e.pair)
          throw internal_error("free verdict with a commuting pair for " + to_string(t));
      }
      e.cls = std::move(cls);
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace liegrad
