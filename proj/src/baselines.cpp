#include "cyclebasis/baselines.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cyclebasis/rng.hpp"

namespace cyclebasis {

namespace {

struct Forest {
  std::vector<int> parent;       // -1 root/unreached
  std::vector<int> parent_edge;  // -1
  std::vector<int> depth;        // -1 unreached
  std::vector<char> tree_edge;   // by edge id
};

void grow_bfs(const MultiGraph& g, int root, Forest& f) {
  std::deque<int> queue{root};
  f.depth[root] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (auto [e, w] : g.incident(v)) {
      if (f.depth[w] < 0) {
        f.depth[w] = f.depth[v] + 1;
        f.parent[w] = v;
        f.parent_edge[w] = e;
        f.tree_edge[e] = 1;
        queue.push_back(w);
      }
    }
  }
}

void grow_dfs(const MultiGraph& g, int root, Forest& f) {
  // Iterative preorder DFS scanning each adjacency list in insertion order.
  std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
  f.depth[root] = 0;
  while (!stack.empty()) {
    int v = stack.back().first;
    const auto& inc = g.incident(v);
    bool descended = false;
    while (stack.back().second < inc.size()) {
      auto [e, w] = inc[stack.back().second++];
      if (f.depth[w] < 0) {
        f.depth[w] = f.depth[v] + 1;
        f.parent[w] = v;
        f.parent_edge[w] = e;
        f.tree_edge[e] = 1;
        stack.emplace_back(w, 0);
        descended = true;
        break;
      }
    }
    if (!descended) stack.pop_back();
  }
}

Cycle tree_cycle(const MultiGraph& g, const Forest& f, int e) {
  auto [x, y] = g.endpoints(e);
  std::vector<int> ids{e};
  while (x != y) {
    if (f.depth[x] >= f.depth[y]) {
      ids.push_back(f.parent_edge[x]);
      x = f.parent[x];
    } else {
      ids.push_back(f.parent_edge[y]);
      y = f.parent[y];
    }
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

CycleBasis fundamental_basis(const MultiGraph& g, TreePolicy policy,
                             std::uint64_t seed) {
  Rng rng(seed);
  Forest f;
  f.parent.assign(g.vertex_limit(), -1);
  f.parent_edge.assign(g.vertex_limit(), -1);
  f.depth.assign(g.vertex_limit(), -1);
  f.tree_edge.assign(g.edge_limit(), 0);
  std::vector<char> assigned(g.vertex_limit(), 0);
  for (int s : g.live_vertices()) {
    if (assigned[s]) continue;
    // Collect the component (deterministic order), then pick its root.
    std::vector<int> comp{s};
    assigned[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (auto [e, w] : g.incident(comp[i])) {
        (void)e;
        if (!assigned[w]) {
          assigned[w] = 1;
          comp.push_back(w);
        }
      }
    int root = comp[rng.index(comp.size())];
    if (policy == TreePolicy::bfs)
      grow_bfs(g, root, f);
    else
      grow_dfs(g, root, f);
  }
  CycleBasis basis;
  long long k = 0;
  for (int e : g.live_edges()) {
    if (f.tree_edge[e]) continue;
    Cycle c = tree_cycle(g, f, e);
    int len = static_cast<int>(c.size());
    basis.cycles.push_back(std::move(c));
    basis.meta.push_back({++k, len, 'T'});
  }
  return basis;
}

long long basis_total_length(const CycleBasis& basis) {
  long long total = 0;
  for (const Cycle& c : basis.cycles) total += static_cast<long long>(c.size());
  return total;
}

namespace {

// Shortest-path bitsets from root: paths ordered by (length, bitset value),
// which is a strict total order, so each vertex's shortest path is unique
// and independent of adjacency iteration order.
struct SpTree {
  std::vector<int> dist;        // -1 unreached
  std::vector<EdgeVector> tie;  // path bitset per vertex
};

SpTree sp_tree(const MultiGraph& g, int root) {
  SpTree t{std::vector<int>(g.vertex_limit(), -1), {}};
  t.tie.assign(g.vertex_limit(), EdgeVector(g.edge_limit()));
  std::deque<int> queue{root};
  t.dist[root] = 0;
  std::vector<std::vector<int>> by_level{{root}};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (auto [e, w] : g.incident(v)) {
      (void)e;
      if (t.dist[w] < 0) {
        t.dist[w] = t.dist[v] + 1;
        if (static_cast<int>(by_level.size()) <= t.dist[w]) by_level.emplace_back();
        by_level[t.dist[w]].push_back(w);
        queue.push_back(w);
      }
    }
  }
  for (std::size_t level = 1; level < by_level.size(); ++level) {
    for (int u : by_level[level]) {
      bool have = false;
      EdgeVector best(g.edge_limit());
      for (auto [e, w] : g.incident(u)) {
        if (w == u || t.dist[w] != t.dist[u] - 1) continue;
        EdgeVector cand = t.tie[w];
        cand.set(e);
        if (!have || cand.value_less(best)) {
          best = std::move(cand);
          have = true;
        }
      }
      t.tie[u] = std::move(best);
    }
  }
  return t;
}

bool support_is_simple_cycle(const MultiGraph& g, const EdgeVector& vec) {
  std::map<int, int> deg;
  for (int e : vec.to_edges()) {
    auto [u, v] = g.endpoints(e);
    if (u == v) return vec.popcount() == 1;  // lone self-loop only
    deg[u] += 1;
    deg[v] += 1;
  }
  for (auto [v, d] : deg) {
    (void)v;
    if (d != 2) return false;
  }
  return true;
}

}  // namespace

CycleBasis min_weight_cycle_basis(const MultiGraph& g) {
  int dim = g.edge_count() - g.vertex_count() + g.component_count();
  CycleBasis basis;
  if (dim == 0) return basis;
  std::set<std::vector<std::uint64_t>> seen;
  struct Candidate {
    int len;
    EdgeVector vec;
  };
  std::vector<Candidate> cands;
  for (int e : g.live_edges()) {
    auto [u, v] = g.endpoints(e);
    if (u != v) continue;
    EdgeVector vec(g.edge_limit());
    vec.set(e);
    if (seen.insert(vec.words()).second) cands.push_back({1, std::move(vec)});
  }
  for (int root : g.live_vertices()) {
    SpTree t = sp_tree(g, root);
    for (int e : g.live_edges()) {
      auto [x, y] = g.endpoints(e);
      if (x == y || t.dist[x] < 0 || t.dist[y] < 0) continue;
      EdgeVector vec = t.tie[x];
      vec ^= t.tie[y];
      vec.flip(e);
      int len = vec.popcount();
      if (len != t.dist[x] + t.dist[y] + 1) continue;  // paths must not meet
      if (!support_is_simple_cycle(g, vec)) continue;
      if (seen.insert(vec.words()).second) cands.push_back({len, std::move(vec)});
    }
  }
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.len != b.len) return a.len < b.len;
    return a.vec.value_less(b.vec);
  });
  std::map<int, EdgeVector> pivots;  // pivot id -> reduced row
  long long k = 0;
  for (const Candidate& c : cands) {
    if (static_cast<int>(basis.cycles.size()) == dim) break;
    EdgeVector row = c.vec;
    int lead = row.lowest_set();
    while (lead >= 0) {
      auto it = pivots.find(lead);
      if (it == pivots.end()) break;
      row ^= it->second;
      lead = row.lowest_set();
    }
    if (lead < 0) continue;  // dependent on earlier picks
    pivots.emplace(lead, std::move(row));
    basis.cycles.push_back(c.vec.to_edges());
    basis.meta.push_back({++k, c.len, 'M'});
  }
  if (static_cast<int>(basis.cycles.size()) != dim)
    throw std::logic_error("min_weight_cycle_basis: candidate pool did not span the cycle space");
  return basis;
}

Rational cheeger_constant(const MultiGraph& g) {
  std::vector<int> verts = g.live_vertices();
  int n = static_cast<int>(verts.size());
  if (n < 2) throw std::invalid_argument("cheeger_constant: need at least 2 vertices");
  if (n > 26) throw std::invalid_argument("cheeger_constant: exhaustive search capped at 26 vertices");
  if (!g.connected()) throw std::invalid_argument("cheeger_constant: graph must be connected");
  std::vector<int> index(g.vertex_limit(), -1);
  for (int i = 0; i < n; ++i) index[verts[i]] = i;
  // Per compact vertex: list of other-endpoint indices, one per non-loop edge.
  std::vector<std::vector<int>> nbr(n);
  for (int e : g.live_edges()) {
    auto [u, v] = g.endpoints(e);
    if (u == v) continue;
    nbr[index[u]].push_back(index[v]);
    nbr[index[v]].push_back(index[u]);
  }
  std::vector<char> in(n, 0);
  long long cut = 0;
  int size = 0;
  long long best_num = -1, best_den = 1;
  // Gray-code walk: subset g^(g>>1) differs from its predecessor by bit
  // ctz(g); the boundary updates incrementally.
  for (std::uint64_t code = 1; code < (1ULL << n); ++code) {
    int b = std::countr_zero(code);
    if (in[b]) {
      in[b] = 0;
      --size;
      for (int w : nbr[b]) cut += in[w] ? 1 : -1;
    } else {
      in[b] = 1;
      ++size;
      for (int w : nbr[b]) cut += in[w] ? -1 : 1;
    }
    if (size >= 1 && 2 * size <= n) {
      // cut/size < best_num/best_den ?
      if (best_num < 0 || cut * best_den < best_num * size) {
        best_num = cut;
        best_den = size;
      }
    }
  }
  long long d = std::gcd(best_num, best_den);
  if (d > 1) {
    best_num /= d;
    best_den /= d;
  }
  return {best_num, best_den};
}

}  // namespace cyclebasis
