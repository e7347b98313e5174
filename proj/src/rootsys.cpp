#include "liegrad/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace liegrad {

DynkinDiagram dynkin_diagram(SimpleLieType t) {
  make_type(t.family, t.rank);  // revalidate
  int n = t.rank;
  DynkinDiagram d;
  d.nodes.resize(n);
  std::iota(d.nodes.begin(), d.nodes.end(), 1);
  auto path = [&](int upto) {
    for (int i = 1; i < upto; ++i) d.edges.push_back({i, i + 1, 1, 0});
  };
  switch (t.family) {
    case Family::A:
      path(n);
      break;
    case Family::B:  // alpha_n short
      path(n - 1);
      d.edges.push_back({n - 1, n, 2, n});
      break;
    case Family::C:  // alpha_n long
      path(n - 1);
      d.edges.push_back({n - 1, n, 2, n - 1});
      break;
    case Family::D:  // fork at n-2
      path(n - 1);
      d.edges.push_back({n - 2, n, 1, 0});
      break;
    case Family::E:  // branch node 4 carries node 2
      d.edges.push_back({1, 3, 1, 0});
      for (int i = 3; i < n; ++i) d.edges.push_back({i, i + 1, 1, 0});
      d.edges.push_back({2, 4, 1, 0});
      break;
    case Family::F:  // alpha_3, alpha_4 short
      d.edges = {{1, 2, 1, 0}, {2, 3, 2, 3}, {3, 4, 1, 0}};
      break;
    case Family::G:  // alpha_1 short: the highest root is 3*alpha_1 + 2*alpha_2
      d.edges = {{1, 2, 3, 1}};
      break;
  }
  std::sort(d.edges.begin(), d.edges.end());
  return d;
}

std::vector<std::vector<int>> cartan_matrix(SimpleLieType t) {
  DynkinDiagram d = dynkin_diagram(t);
  int n = t.rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  for (const auto& e : d.edges) {
    int a = e.a - 1, b = e.b - 1;
    if (e.multiplicity == 1) {
      c[a][b] = c[b][a] = -1;
    } else {
      // the short root's row picks up the -multiplicity entry
      int s = e.short_end - 1, l = (e.short_end == e.a ? e.b : e.a) - 1;
      c[s][l] = -e.multiplicity;
      c[l][s] = -1;
    }
  }
  return c;
}

namespace {

int pairing(const std::vector<std::vector<int>>& cartan, const Root& r, int i) {
  int v = 0;
  for (std::size_t j = 0; j < r.size(); ++j) v += r[j] * cartan[i][j];
  return v;
}

}  // namespace

RootSystem build_root_system(SimpleLieType t) {
  RootSystem rs;
  rs.type = t;
  rs.cartan = cartan_matrix(t);
  int n = t.rank;

  std::set<Root> found;
  std::vector<Root> frontier;
  for (int i = 0; i < n; ++i) {
    Root alpha(n, 0);
    alpha[i] = 1;
    found.insert(alpha);
    frontier.push_back(alpha);
  }

  // Breadth-first by height. For alpha != alpha_i the alpha_i-string through alpha
  // is unbroken: with p the downward extent, alpha + alpha_i is a root iff
  // p - <alpha, alpha_i^vee> >= 1. Lower roots are always already known.
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& alpha : frontier) {
      for (int i = 0; i < n; ++i) {
        bool is_simple_i = alpha[i] == 1 && std::count(alpha.begin(), alpha.end(), 0) == n - 1;
        if (is_simple_i) continue;  // 2*alpha_i is never a root
        int p = 0;
        Root down = alpha;
        while (true) {
          down[i] -= 1;
          if (down[i] < 0 || !found.count(down)) break;
          ++p;
        }
        if (p - pairing(rs.cartan, alpha, i) >= 1) {
          Root up = alpha;
          up[i] += 1;
          if (found.insert(up).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }

  rs.positive_roots.assign(found.begin(), found.end());
  if (static_cast<long long>(rs.positive_roots.size()) != positive_root_count(t))
    throw internal_error("root closure for " + to_string(t) + " produced " +
                         std::to_string(rs.positive_roots.size()) + " roots, expected " +
                         std::to_string(positive_root_count(t)));

  // The highest root is the unique coefficientwise-maximal positive root.
  const Root* best = &rs.positive_roots.front();
  auto total = [](const Root& r) { return std::accumulate(r.begin(), r.end(), 0); };
  for (const Root& r : rs.positive_roots)
    if (total(r) > total(*best)) best = &r;
  for (const Root& r : rs.positive_roots)
    for (int i = 0; i < n; ++i)
      if (r[i] > (*best)[i])
        throw internal_error("highest root of " + to_string(t) + " is not dominant");
  rs.highest_root = *best;
  return rs;
}

bool RootSystem::contains_positive(const Root& r) const {
  return std::binary_search(positive_roots.begin(), positive_roots.end(), r);
}

const Root& highest_root(const RootSystem& rs) { return rs.highest_root; }

bool is_root(const RootSystem& rs, const Root& coeffs) {
  if (static_cast<int>(coeffs.size()) != rs.rank())
    throw input_error("coefficient vector has length " + std::to_string(coeffs.size()) +
                      ", expected " + std::to_string(rs.rank()));
  bool has_pos = false, has_neg = false;
  for (int c : coeffs) {
    has_pos |= c > 0;
    has_neg |= c < 0;
  }
  if (has_pos && has_neg) return false;
  if (!has_pos && !has_neg) return false;  // zero vector
  if (has_pos) return rs.contains_positive(coeffs);
  Root neg = coeffs;
  for (int& c : neg) c = -c;
  return rs.contains_positive(neg);
}

int sigma_height(const Root& root, const Sigma& sigma) {
  int h = 0;
  for (int idx : sigma.indices) {
    if (idx < 1 || idx > static_cast<int>(root.size()))
      throw input_error("sigma index " + std::to_string(idx) + " out of range for rank " +
                        std::to_string(root.size()));
    h += root[idx - 1];
  }
  return h;
}

namespace {

struct EdgeSignature {
  int multiplicity;
  int role;  // 0 = untyped, 1 = this endpoint is short, 2 = other endpoint is short
  auto operator<=>(const EdgeSignature&) const = default;
};

EdgeSignature signature_for(const DynkinEdge& e, int endpoint) {
  if (e.multiplicity == 1) return {1, 0};
  return {e.multiplicity, e.short_end == endpoint ? 1 : 2};
}

}  // namespace

std::vector<NodePermutation> diagram_automorphisms(const DynkinDiagram& d) {
  const auto& nodes = d.nodes;
  int m = static_cast<int>(nodes.size());
  int maxlabel = nodes.empty() ? 0 : *std::max_element(nodes.begin(), nodes.end());

  // adjacency with per-endpoint edge signatures
  std::map<int, std::vector<std::pair<int, EdgeSignature>>> adj;
  std::map<std::pair<int, int>, EdgeSignature> sig;
  for (int v : nodes) adj[v];
  for (const auto& e : d.edges) {
    adj[e.a].push_back({e.b, signature_for(e, e.a)});
    adj[e.b].push_back({e.a, signature_for(e, e.b)});
    sig[{e.a, e.b}] = signature_for(e, e.a);
    sig[{e.b, e.a}] = signature_for(e, e.b);
  }
  // node signature: sorted multiset of incident edge signatures
  std::map<int, std::vector<EdgeSignature>> nodesig;
  for (int v : nodes) {
    for (auto& [w, s] : adj[v]) nodesig[v].push_back(s);
    std::sort(nodesig[v].begin(), nodesig[v].end());
  }

  std::vector<NodePermutation> result;
  NodePermutation perm(maxlabel + 1, 0);
  std::vector<int> used(maxlabel + 1, 0);

  auto consistent = [&](int v, int image) {
    if (nodesig[v] != nodesig[image]) return false;
    for (auto& [w, s] : adj[v]) {
      if (!perm[w]) continue;  // neighbor not assigned yet
      auto it = sig.find({image, perm[w]});
      if (it == sig.end() || it->second != s) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == m) {
      result.push_back(perm);
      return;
    }
    int v = nodes[pos];
    for (int image : nodes) {
      if (used[image] || !consistent(v, image)) continue;
      perm[v] = image;
      used[image] = 1;
      self(self, pos + 1);
      perm[v] = 0;
      used[image] = 0;
    }
  };
  rec(rec, 0);
  std::sort(result.begin(), result.end());
  return result;
}

Root apply_permutation(const NodePermutation& perm, const Root& r) {
  Root out(r.size(), 0);
  for (std::size_t i = 0; i < r.size(); ++i) out[perm[i + 1] - 1] = r[i];
  return out;
}

Sigma apply_permutation(const NodePermutation& perm, const Sigma& s) {
  std::vector<int> idx;
  idx.reserve(s.indices.size());
  for (int i : s.indices) idx.push_back(perm[i]);
  std::sort(idx.begin(), idx.end());
  return Sigma{std::move(idx)};
}

}  // namespace liegrad
