#include "liegrad/levi.hpp"

#include <algorithm>
#include <array>

namespace liegrad {

SimpleLieType classify_component(const DynkinDiagram& sub) {
  int m = static_cast<int>(sub.nodes.size());
  if (m == 0) throw internal_error("classify_component: empty diagram");
  if (m == 1) return {Family::A, 1};
  if (static_cast<int>(sub.edges.size()) != m - 1)
    throw internal_error("classify_component: not a tree");

  // adjacency over local indices 0..m-1; node labels are sorted in sub.nodes
  auto local = [&](int label) {
    return static_cast<int>(std::lower_bound(sub.nodes.begin(), sub.nodes.end(), label) -
                            sub.nodes.begin());
  };
  std::vector<std::array<int, 3>> nbr(m, {-1, -1, -1});
  std::vector<int> degree(m, 0);
  for (const auto& e : sub.edges) {
    int a = local(e.a), b = local(e.b);
    if (degree[a] == 3 || degree[b] == 3)
      throw internal_error("classify_component: node of degree > 3");
    nbr[a][degree[a]++] = b;
    nbr[b][degree[b]++] = a;
  }
  int max_degree = *std::max_element(degree.begin(), degree.end());

  int max_mult = 1;
  const DynkinEdge* marked = nullptr;
  for (const auto& e : sub.edges)
    if (e.multiplicity > max_mult) {
      max_mult = e.multiplicity;
      marked = &e;
    }

  if (max_mult == 3) {
    if (m == 2) return {Family::G, 2};
    throw internal_error("classify_component: triple edge in a larger diagram");
  }

  if (max_mult == 2) {
    if (max_degree > 2) throw internal_error("classify_component: fork with a double edge");
    if (m == 2) return {Family::B, 2};  // canonical label for the B2 = C2 coincidence
    int deg_a = degree[local(marked->a)];
    int deg_b = degree[local(marked->b)];
    if (deg_a == 2 && deg_b == 2) {
      if (m == 4) return {Family::F, 4};  // interior double edge on a 4-node path
      throw internal_error("classify_component: interior double edge, not F4");
    }
    int terminal = deg_a == 1 ? marked->a : marked->b;
    return {marked->short_end == terminal ? Family::B : Family::C, m};
  }

  if (max_degree <= 2) return {Family::A, m};  // simply-laced path
  if (max_degree > 3) throw internal_error("classify_component: node of degree > 3");
  int forks = 0, fork = -1;
  for (int v = 0; v < m; ++v)
    if (degree[v] == 3) {
      ++forks;
      fork = v;
    }
  if (forks != 1) throw internal_error("classify_component: multiple fork nodes");

  // branch lengths hanging off the fork, ascending
  std::vector<int> len;
  for (int s = 0; s < 3; ++s) {
    int steps = 0, prev = fork, cur = nbr[fork][s];
    while (true) {
      ++steps;
      if (degree[cur] == 1) break;
      int next = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
      prev = cur;
      cur = next;
    }
    len.push_back(steps);
  }
  std::sort(len.begin(), len.end());
  if (len[0] == 1 && len[1] == 1) return {Family::D, m};
  if (len[0] == 1 && len[1] == 2 && len[2] >= 2 && len[2] <= 4) return {Family::E, m};
  throw internal_error("classify_component: unrecognized branched shape");
}

namespace {

bool factor_order(const SimpleLieType& x, const SimpleLieType& y) {
  if (x.family != y.family) return x.family < y.family;
  return x.rank > y.rank;
}

}  // namespace

ReductiveDescription levi_structure(SimpleLieType t, const Sigma& sigma) {
  make_type(t.family, t.rank);
  Sigma s = make_sigma(sigma.indices, t.rank);
  DynkinDiagram full = dynkin_diagram(t);

  int n = t.rank;
  std::vector<char> removed(n + 1, 0);
  for (int v : s.indices) removed[v] = 1;

  // surviving edges, grouped per endpoint
  std::vector<std::vector<int>> edge_ids(n + 1);
  std::vector<DynkinEdge> kept;
  for (const auto& e : full.edges)
    if (!removed[e.a] && !removed[e.b]) {
      edge_ids[e.a].push_back(static_cast<int>(kept.size()));
      edge_ids[e.b].push_back(static_cast<int>(kept.size()));
      kept.push_back(e);
    }

  ReductiveDescription desc;
  desc.center_dim = static_cast<int>(s.indices.size());

  std::vector<char> seen(n + 1, 0);
  std::vector<int> stack;
  for (int start = 1; start <= n; ++start) {
    if (removed[start] || seen[start]) continue;
    DynkinDiagram comp;
    std::vector<char> edge_taken(kept.size(), 0);
    stack.assign(1, start);
    seen[start] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.nodes.push_back(v);
      for (int id : edge_ids[v]) {
        if (!edge_taken[id]) {
          edge_taken[id] = 1;
          comp.edges.push_back(kept[id]);
        }
        int w = kept[id].a == v ? kept[id].b : kept[id].a;
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.nodes.begin(), comp.nodes.end());
    std::sort(comp.edges.begin(), comp.edges.end());
    desc.factors.push_back(classify_component(comp));
  }

  std::sort(desc.factors.begin(), desc.factors.end(), factor_order);
  desc.total_dim = reductive_dimension(desc);
  return desc;
}

long long reductive_dimension(const ReductiveDescription& desc) {
  long long dim = desc.center_dim;
  for (const auto& f : desc.factors) dim += algebra_dim(f);
  return dim;
}

std::string to_string(const ReductiveDescription& desc) {
  std::string s = desc.center_dim == 1 ? "C" : "C^" + std::to_string(desc.center_dim);
  for (const auto& f : desc.factors) s += "+" + to_string(f);
  return s;
}

}  // namespace liegrad
