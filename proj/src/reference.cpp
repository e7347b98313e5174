#include "liegrad/reference.hpp"

#include <algorithm>

namespace liegrad::reference {

Root highest_root_pattern(SimpleLieType t) {
  int n = t.rank;
  Root r(n, 0);
  switch (t.family) {
    case Family::A:
      std::fill(r.begin(), r.end(), 1);
      break;
    case Family::B:
      std::fill(r.begin(), r.end(), 2);
      r[0] = 1;
      break;
    case Family::C:
      std::fill(r.begin(), r.end(), 2);
      r[n - 1] = 1;
      break;
    case Family::D:
      std::fill(r.begin(), r.end(), 2);
      r[0] = r[n - 2] = r[n - 1] = 1;
      break;
    case Family::E:
      if (n == 6) r = {1, 2, 2, 3, 2, 1};
      if (n == 7) r = {2, 2, 3, 4, 3, 2, 1};
      if (n == 8) r = {2, 3, 4, 6, 5, 4, 3, 2};
      break;
    case Family::F:
      r = {2, 3, 4, 2};
      break;
    case Family::G:
      r = {3, 2};
      break;
  }
  return r;
}

namespace {

SimpleLieType ty(Family f, int rank) { return SimpleLieType{f, rank}; }

}  // namespace

const std::vector<ExceptionalGrading>& exceptional_gradings() {
  static const std::vector<ExceptionalGrading> rows = {
      {ty(Family::E, 6), Sigma{{1, 2}}, {15, 10, 1}},
      {ty(Family::E, 6), Sigma{{1, 3}}, {11, 10, 5}},
      {ty(Family::E, 6), Sigma{{1, 5}}, {16, 9, 4}},
      {ty(Family::E, 6), Sigma{{4}}, {17, 10, 2}},
      {ty(Family::E, 7), Sigma{{1, 7}}, {25, 17, 1}},
      {ty(Family::E, 7), Sigma{{2, 7}}, {25, 17, 6}},
      {ty(Family::E, 7), Sigma{{6, 7}}, {16, 17, 10}},
      {ty(Family::E, 7), Sigma{{3}}, {30, 15, 2}},
      {ty(Family::E, 7), Sigma{{5}}, {30, 15, 5}},
      {ty(Family::E, 8), Sigma{{2}}, {56, 28, 8}},
      {ty(Family::E, 8), Sigma{{7}}, {54, 27, 2}},
      {ty(Family::F, 4), Sigma{{2}}, {12, 6, 2}},
      {ty(Family::G, 2), Sigma{{1}}, {2, 1, 2}},
  };
  return rows;
}

std::optional<DimTriple> corrected_exceptional_dims(SimpleLieType t, const Sigma& sigma) {
  struct Row {
    SimpleLieType type;
    Sigma sigma;
    DimTriple dims;
  };
  // verified against the orthogonal-basis root lists; the published rows swap one
  // root between depths 1 and 2
  static const std::vector<Row> rows = {
      {ty(Family::E, 6), Sigma{{4}}, {18, 9, 2}},
      {ty(Family::E, 7), Sigma{{1, 7}}, {26, 16, 1}},
      {ty(Family::E, 7), Sigma{{2, 7}}, {26, 16, 6}},
      {ty(Family::E, 7), Sigma{{6, 7}}, {17, 16, 10}},
  };
  for (const auto& row : rows)
    if (row.type == t && row.sigma == sigma) return row.dims;
  return std::nullopt;
}

const std::vector<LeviRow>& exceptional_levi_rows() {
  static const std::vector<LeviRow> rows = {
      {ty(Family::E, 6), Sigma{{1, 2}}, 2, {ty(Family::A, 4)}},
      {ty(Family::E, 6), Sigma{{1, 3}}, 2, {ty(Family::A, 4)}},
      {ty(Family::E, 6), Sigma{{1, 5}}, 2, {ty(Family::A, 3), ty(Family::A, 1)}},
      {ty(Family::E, 6), Sigma{{4}}, 1, {ty(Family::A, 2), ty(Family::A, 2), ty(Family::A, 1)}},
      {ty(Family::E, 7), Sigma{{1, 7}}, 2, {ty(Family::D, 5)}},
      {ty(Family::E, 7), Sigma{{6, 7}}, 2, {ty(Family::D, 5)}},
      {ty(Family::E, 7), Sigma{{2, 7}}, 2, {ty(Family::A, 5)}},
      {ty(Family::E, 7), Sigma{{3}}, 1, {ty(Family::A, 5), ty(Family::A, 1)}},
      {ty(Family::E, 7), Sigma{{5}}, 1, {ty(Family::A, 4), ty(Family::A, 2)}},
      {ty(Family::E, 8), Sigma{{2}}, 1, {ty(Family::A, 7)}},
      {ty(Family::E, 8), Sigma{{7}}, 1, {ty(Family::A, 1), ty(Family::E, 6)}},
      {ty(Family::F, 4), Sigma{{2}}, 1, {ty(Family::A, 2), ty(Family::A, 1)}},
      {ty(Family::G, 2), Sigma{{1}}, 1, {ty(Family::A, 1)}},
  };
  return rows;
}

void append_canonical_factor(std::vector<SimpleLieType>& out, Family family, int rank) {
  if (rank <= 0) return;
  if (rank == 1) {
    out.push_back(ty(Family::A, 1));  // B1/C1/D1 are all sl_2
    return;
  }
  if (family == Family::C && rank == 2) {
    out.push_back(ty(Family::B, 2));
    return;
  }
  if (family == Family::D && rank == 2) {
    out.push_back(ty(Family::A, 1));
    out.push_back(ty(Family::A, 1));
    return;
  }
  if (family == Family::D && rank == 3) {
    out.push_back(ty(Family::A, 3));
    return;
  }
  out.push_back(ty(family, rank));
}

ReductiveDescription classical_levi_expected(SimpleLieType t, const Sigma& sigma) {
  const auto& ix = sigma.indices;
  int n = t.rank;
  ReductiveDescription desc;
  desc.center_dim = static_cast<int>(ix.size());
  auto add = [&](Family f, int rank) { append_canonical_factor(desc.factors, f, rank); };
  switch (t.family) {
    case Family::A: {
      if (ix.size() != 3) throw input_error("A-family |3|-sigma has three indices");
      int i = ix[0], j = ix[1], k = ix[2];
      add(Family::A, i - 1);
      add(Family::A, j - i - 1);
      add(Family::A, k - j - 1);
      add(Family::A, n - k);
      break;
    }
    case Family::B: {
      int i = ix[1];
      add(Family::A, i - 2);
      add(Family::B, n - i);
      break;
    }
    case Family::C: {
      int i = ix[0];
      add(Family::A, i - 1);
      add(Family::A, n - i - 1);
      break;
    }
    case Family::D: {
      if (ix.size() == 3) {
        add(Family::A, n - 3);
      } else if (ix[0] == 1) {
        add(Family::A, ix[1] - 2);
        add(Family::D, n - ix[1]);
      } else {
        add(Family::A, ix[0] - 1);
        add(Family::A, n - ix[0] - 1);
      }
      break;
    }
    default:
      throw input_error("classical families only");
  }
  std::sort(desc.factors.begin(), desc.factors.end(), [](const auto& x, const auto& y) {
    if (x.family != y.family) return x.family < y.family;
    return x.rank > y.rank;
  });
  desc.total_dim = reductive_dimension(desc);
  return desc;
}

std::optional<long long> published_cubic_constant(SimpleLieType t, const Sigma& sigma) {
  struct Row {
    SimpleLieType type;
    Sigma sigma;
    long long constant;
  };
  static const std::vector<Row> rows = {
      {ty(Family::E, 6), Sigma{{1, 2}}, 156}, {ty(Family::E, 6), Sigma{{1, 3}}, 156},
      {ty(Family::E, 6), Sigma{{1, 5}}, 174}, {ty(Family::E, 6), Sigma{{4}}, 174},
      {ty(Family::E, 7), Sigma{{1, 7}}, 258}, {ty(Family::E, 7), Sigma{{6, 7}}, 258},
      {ty(Family::E, 7), Sigma{{2, 7}}, 288}, {ty(Family::E, 7), Sigma{{3}}, 282},
      {ty(Family::E, 7), Sigma{{5}}, 360},    {ty(Family::E, 8), Sigma{{2}}, 282},
      {ty(Family::E, 8), Sigma{{7}}, 498},    {ty(Family::F, 4), Sigma{{2}}, 120},
      {ty(Family::G, 2), Sigma{{1}}, 30},
  };
  for (const auto& row : rows)
    if (row.type == t && row.sigma == sigma) return row.constant;
  return std::nullopt;
}

std::vector<Erratum> closed_form_errata(SimpleLieType t) {
  std::vector<Erratum> out;
  if (t.family != Family::B && t.family != Family::C) return out;
  RootSystem rs = build_root_system(t);
  for (const Sigma& s : enumerate_sigmas(rs, 3)) {
    ClosedFormDims cf = closed_form_dims(t, s);
    for (int depth = 1; depth <= 3; ++depth) {
      if (cf.published[depth - 1] == cf.corrected[depth - 1]) continue;
      int i = t.family == Family::B ? s.indices[1] : s.indices[0];
      out.push_back({"closed_form:" + std::string(1, static_cast<char>(t.family)) +
                         " n=" + std::to_string(t.rank) + " i=" + std::to_string(i) +
                         " depth=" + std::to_string(depth),
                     std::to_string(cf.published[depth - 1]),
                     std::to_string(cf.corrected[depth - 1]),
                     "published closed form disagrees with root enumeration"});
    }
  }
  return out;
}

const std::vector<Erratum>& standing_errata() {
  static const std::vector<Erratum> rows = {
      {"levi:E7 sigma={5}", "C^2+A1+A2 (dim 14)", "C+A4+A2 (dim 33)",
       "reductive part listed beside the cubic equations disagrees with the node-deletion table"},
      {"cubic:E7 sigma={5}", "360", "300", "constant follows the dim-14 reductive part"},
      {"cubic:E8 sigma={2}", "282", "552", "C+A7 has dimension 64, giving 3(248-64)"},
      {"dim:F4", "54", "52", "dimension of f4 as stated beside the cubic equations"},
      {"diophantine:B", "-r^6+2r^4+7r^3+8r^2-16r = 36n-12",
       "-r^6+2r^4+15r^3+8r^2-24r+6 = 36n-12",
       "published reduction does not follow from its own depth-2/3 equations"},
      {"diophantine:C", "r^2-5r = -2(n-i)(2i+1)", "r^2-5r = -2(n-i)(n+1)",
       "published relation rests on the erroneous depth-2 closed form"},
  };
  return rows;
}

}  // namespace liegrad::reference
