#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "liegrad/reference.hpp"
#include "liegrad/rootsys.hpp"

using namespace liegrad;

namespace {

std::vector<SimpleLieType> all_types(int max_rank) {
  std::vector<SimpleLieType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    for (int r = 1; r <= max_rank; ++r)
      if (valid_rank(f, r)) out.push_back({f, r});
  return out;
}

// Oracle Cartan data, written down independently of the production construction:
// M[i][j] = <alpha_{i+1}, alpha_{j+1}^vee> (note: transposed convention), so the
// simple reflection s_j acts by beta[j] -= sum_i beta[i] * M[i][j].
std::vector<std::vector<int>> oracle_cartan(SimpleLieType t) {
  int n = t.rank;
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;
  auto bond = [&](int a, int b, int ab, int ba) {  // 1-based
    m[a - 1][b - 1] = ab;
    m[b - 1][a - 1] = ba;
  };
  switch (t.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) bond(i, i + 1, -1, -1);
      break;
    case Family::B:
      for (int i = 1; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
      bond(n - 1, n, -2, -1);
      break;
    case Family::C:
      for (int i = 1; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
      bond(n - 1, n, -1, -2);
      break;
    case Family::D:
      for (int i = 1; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
      bond(n - 2, n, -1, -1);
      break;
    case Family::E:
      bond(1, 3, -1, -1);
      for (int i = 3; i < n; ++i) bond(i, i + 1, -1, -1);
      bond(2, 4, -1, -1);
      break;
    case Family::F:
      bond(1, 2, -1, -1);
      bond(2, 3, -2, -1);
      bond(3, 4, -1, -1);
      break;
    case Family::G:
      bond(1, 2, -1, -3);
      break;
  }
  return m;
}

// Independent enumeration: close {+-simple roots} under all simple reflections.
std::set<Root> orbit_positive_roots(SimpleLieType t) {
  auto m = oracle_cartan(t);
  int n = t.rank;
  std::set<Root> all;
  std::vector<Root> frontier;
  for (int i = 0; i < n; ++i) {
    Root a(n, 0);
    a[i] = 1;
    all.insert(a);
    frontier.push_back(a);
    a[i] = -1;
    all.insert(a);
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& beta : frontier) {
      for (int j = 0; j < n; ++j) {
        int c = 0;
        for (int i = 0; i < n; ++i) c += beta[i] * m[i][j];
        Root image = beta;
        image[j] -= c;
        if (all.insert(image).second) next.push_back(image);
      }
    }
    frontier = std::move(next);
  }
  std::set<Root> positives;
  for (const Root& r : all)
    if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) positives.insert(r);
  return positives;
}

}  // namespace

TEST_CASE("positive root counts match the classical closed forms") {
  for (const auto& t : all_types(12)) {
    RootSystem rs = build_root_system(t);
    CHECK(static_cast<long long>(rs.positive_roots.size()) == positive_root_count(t));
  }
}

TEST_CASE("reflection-orbit oracle reproduces the positive systems") {
  for (const auto& t : all_types(8)) {
    RootSystem rs = build_root_system(t);
    std::set<Root> expected = orbit_positive_roots(t);
    std::set<Root> actual(rs.positive_roots.begin(), rs.positive_roots.end());
    CHECK(actual == expected);
  }
}

TEST_CASE("highest roots match the published patterns") {
  for (const auto& t : all_types(12)) {
    RootSystem rs = build_root_system(t);
    CHECK(rs.highest_root == reference::highest_root_pattern(t));
    CHECK(rs.contains_positive(rs.highest_root));
    for (const Root& r : rs.positive_roots)
      for (int i = 0; i < t.rank; ++i) CHECK(r[i] <= rs.highest_root[i]);
  }
}

TEST_CASE("pinned systems") {
  RootSystem g2 = build_root_system({Family::G, 2});
  CHECK(g2.positive_roots.size() == 6);
  CHECK(g2.highest_root == Root{3, 2});

  RootSystem a1 = build_root_system({Family::A, 1});
  CHECK(a1.positive_roots == std::vector<Root>{{1}});

  CHECK(build_root_system({Family::A, 3}).highest_root == Root{1, 1, 1});
  CHECK(build_root_system({Family::C, 3}).highest_root == Root{2, 2, 1});

  RootSystem e8 = build_root_system({Family::E, 8});
  CHECK(e8.positive_roots.size() == 120);
  CHECK(e8.highest_root == Root{2, 3, 4, 6, 5, 4, 3, 2});
}

TEST_CASE("roots are sorted, nonzero and nonnegative; sums behave") {
  RootSystem rs = build_root_system({Family::B, 4});
  CHECK(std::is_sorted(rs.positive_roots.begin(), rs.positive_roots.end()));
  for (const Root& r : rs.positive_roots) {
    CHECK(std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; }));
    CHECK(std::any_of(r.begin(), r.end(), [](int c) { return c > 0; }));
  }
  for (const Root& a : rs.positive_roots)
    for (const Root& b : rs.positive_roots) {
      Root sum(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
      if (is_root(rs, sum))
        CHECK(std::all_of(sum.begin(), sum.end(), [](int c) { return c >= 0; }));
    }
}

TEST_CASE("is_root membership and errors") {
  RootSystem g2 = build_root_system({Family::G, 2});
  CHECK(is_root(g2, {3, 2}));
  CHECK_FALSE(is_root(g2, {2, 2}));
  CHECK_FALSE(is_root(g2, {0, 0}));
  CHECK(is_root(g2, {-1, 0}));
  CHECK(is_root(g2, {-3, -2}));
  CHECK_FALSE(is_root(g2, {1, -1}));
  CHECK_THROWS_AS(is_root(g2, {1, 0, 0}), input_error);
}

TEST_CASE("sigma_height") {
  RootSystem g2 = build_root_system({Family::G, 2});
  CHECK(sigma_height(g2.highest_root, Sigma{{1}}) == 3);
  CHECK(sigma_height(g2.highest_root, Sigma{{}}) == 0);  // empty sum
  CHECK(sigma_height(Root{-3, -2}, Sigma{{1}}) == -3);
  RootSystem a4 = build_root_system({Family::A, 4});
  CHECK(sigma_height(a4.highest_root, Sigma{{1, 2, 4}}) == 3);
  CHECK_THROWS_AS(sigma_height(g2.highest_root, Sigma{{3}}), input_error);
}

TEST_CASE("dynkin diagrams") {
  DynkinDiagram b4 = dynkin_diagram({Family::B, 4});
  CHECK(b4.edges == std::vector<DynkinEdge>{{1, 2, 1, 0}, {2, 3, 1, 0}, {3, 4, 2, 4}});

  DynkinDiagram d4 = dynkin_diagram({Family::D, 4});
  int degree2 = 0;
  for (const auto& e : d4.edges) degree2 += (e.a == 2) + (e.b == 2);
  CHECK(degree2 == 3);

  DynkinDiagram f4 = dynkin_diagram({Family::F, 4});
  bool has_double23 = false;
  for (const auto& e : f4.edges)
    if (e.a == 2 && e.b == 3 && e.multiplicity == 2 && e.short_end == 3) has_double23 = true;
  CHECK(has_double23);

  DynkinDiagram g2 = dynkin_diagram({Family::G, 2});
  CHECK(g2.edges == std::vector<DynkinEdge>{{1, 2, 3, 1}});
}

TEST_CASE("invalid types are rejected") {
  CHECK_THROWS_AS(parse_type("B1"), input_error);
  CHECK_THROWS_AS(parse_type("C2"), input_error);
  CHECK_THROWS_AS(parse_type("E9"), input_error);
  CHECK_THROWS_AS(parse_type("X4"), input_error);
  CHECK_THROWS_AS(parse_type("A"), input_error);
  CHECK_THROWS_AS(parse_type("A0"), input_error);
  CHECK_THROWS_AS(make_type(Family::F, 5), input_error);
  CHECK(parse_type("g2") == SimpleLieType{Family::G, 2});
}

namespace {

// Exhaustive permutation oracle for small diagrams.
std::set<NodePermutation> brute_force_automorphisms(const DynkinDiagram& d) {
  int n = static_cast<int>(d.nodes.size());
  std::map<std::pair<int, int>, std::pair<int, int>> edge;  // (a,b) -> (mult, short)
  for (const auto& e : d.edges) edge[{e.a, e.b}] = {e.multiplicity, e.short_end};
  std::vector<int> image(d.nodes);
  std::set<NodePermutation> result;
  do {
    NodePermutation perm(n + 1, 0);
    for (int i = 0; i < n; ++i) perm[d.nodes[i]] = image[i];
    bool ok = true;
    std::map<std::pair<int, int>, std::pair<int, int>> mapped;
    for (const auto& e : d.edges) {
      int a = perm[e.a], b = perm[e.b];
      if (a > b) std::swap(a, b);
      int s = e.short_end ? perm[e.short_end] : 0;
      mapped[{a, b}] = {e.multiplicity, s};
    }
    ok = mapped == edge;
    if (ok) result.insert(perm);
  } while (std::next_permutation(image.begin(), image.end()));
  return result;
}

}  // namespace

TEST_CASE("diagram automorphisms match the exhaustive oracle for small ranks") {
  for (const auto& t : all_types(7)) {
    DynkinDiagram d = dynkin_diagram(t);
    auto fast = diagram_automorphisms(d);
    std::set<NodePermutation> fast_set(fast.begin(), fast.end());
    CHECK(fast_set == brute_force_automorphisms(d));
    CHECK(fast.size() == fast_set.size());
  }
}

TEST_CASE("automorphism group orders") {
  auto order = [](SimpleLieType t) {
    return diagram_automorphisms(dynkin_diagram(t)).size();
  };
  CHECK(order({Family::A, 1}) == 1);
  CHECK(order({Family::A, 5}) == 2);
  CHECK(order({Family::A, 12}) == 2);
  CHECK(order({Family::D, 4}) == 6);
  CHECK(order({Family::D, 5}) == 2);
  CHECK(order({Family::D, 12}) == 2);
  CHECK(order({Family::E, 6}) == 2);
  CHECK(order({Family::E, 7}) == 1);
  CHECK(order({Family::E, 8}) == 1);
  CHECK(order({Family::B, 6}) == 1);
  CHECK(order({Family::C, 6}) == 1);
  CHECK(order({Family::F, 4}) == 1);
  CHECK(order({Family::G, 2}) == 1);
}

TEST_CASE("A5 reversal and D4 triality") {
  auto a5 = diagram_automorphisms(dynkin_diagram({Family::A, 5}));
  REQUIRE(a5.size() == 2);
  NodePermutation rev(6, 0);
  for (int i = 1; i <= 5; ++i) rev[i] = 6 - i;
  CHECK((a5[0] == rev || a5[1] == rev));

  auto d4 = diagram_automorphisms(dynkin_diagram({Family::D, 4}));
  REQUIRE(d4.size() == 6);
  for (const auto& p : d4) {
    CHECK(p[2] == 2);
    std::set<int> outer{p[1], p[3], p[4]};
    CHECK(outer == std::set<int>{1, 3, 4});
  }
}

TEST_CASE("automorphisms permute the positive roots") {
  for (const auto& t : {SimpleLieType{Family::A, 5}, {Family::D, 5}, {Family::D, 4},
                        {Family::E, 6}}) {
    RootSystem rs = build_root_system(t);
    for (const auto& perm : diagram_automorphisms(dynkin_diagram(t)))
      for (const Root& r : rs.positive_roots)
        CHECK(rs.contains_positive(apply_permutation(perm, r)));
  }
}
