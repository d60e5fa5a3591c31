#pragma once

// Shared fixtures and independent brute-force reference implementations used
// to cross-check the library. Everything here is deliberately naive.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "cyclebasis/gf2.hpp"
#include "cyclebasis/multigraph.hpp"

namespace oracles {

using cyclebasis::Cycle;
using cyclebasis::MultiGraph;

inline MultiGraph cycle_graph(int n) {
  MultiGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline MultiGraph complete_graph(int n) {
  MultiGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline MultiGraph petersen() {
  MultiGraph g(10);
  for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);        // outer C5
  for (int i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 2) % 5);  // pentagram
  for (int i = 0; i < 5; ++i) g.add_edge(i, 5 + i);              // spokes
  return g;
}

// Two triangles joined by one bridge edge; Cheeger constant 1/3.
inline MultiGraph two_triangles_bridge() {
  MultiGraph g(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(5, 3);
  g.add_edge(0, 3);
  return g;
}

// All simple cycles of a simple graph, as sorted edge-id sets. Vertex-based
// backtracking: each cycle is discovered once from its smallest vertex, with
// the second-vertex < last-vertex rule killing the reversed copy.
inline std::vector<Cycle> all_simple_cycles(const MultiGraph& g) {
  for (int e : g.live_edges()) {
    auto [u, v] = g.endpoints(e);
    if (u == v) throw std::invalid_argument("all_simple_cycles: simple graphs only");
  }
  std::map<std::pair<int, int>, std::vector<int>> edge_ids;
  for (int e : g.live_edges()) {
    auto [u, v] = g.endpoints(e);
    edge_ids[std::minmax(u, v)].push_back(e);
  }
  for (auto& [k, ids] : edge_ids) {
    (void)k;
    if (ids.size() > 1) throw std::invalid_argument("all_simple_cycles: simple graphs only");
  }
  std::vector<Cycle> out;
  int lim = g.vertex_limit();
  std::vector<char> on_path(lim, 0);
  std::vector<int> path;
  auto edge_of = [&](int a, int b) { return edge_ids.at(std::minmax(a, b)).front(); };

  std::function<void(int, int)> dfs = [&](int start, int v) {
    on_path[v] = 1;
    path.push_back(v);
    for (auto [e, w] : g.incident(v)) {
      (void)e;
      if (w == start && path.size() >= 3) {
        if (path[1] < path.back()) {
          Cycle c;
          for (std::size_t i = 0; i + 1 < path.size(); ++i)
            c.push_back(edge_of(path[i], path[i + 1]));
          c.push_back(edge_of(path.back(), start));
          std::sort(c.begin(), c.end());
          out.push_back(std::move(c));
        }
      } else if (w > start && !on_path[w]) {
        dfs(start, w);
      }
    }
    on_path[v] = 0;
    path.pop_back();
  };
  for (int s : g.live_vertices()) dfs(s, s);
  return out;
}

// Exact minimum cycle basis total length: greedy over all simple cycles
// sorted by length (the cycle space is a matroid, so greedy is optimal).
inline long long brute_force_mcb_total(const MultiGraph& g) {
  int dim = g.edge_count() - g.vertex_count() + g.component_count();
  if (dim == 0) return 0;
  std::vector<Cycle> cycles = all_simple_cycles(g);
  std::stable_sort(cycles.begin(), cycles.end(),
                   [](const Cycle& a, const Cycle& b) { return a.size() < b.size(); });
  std::map<int, cyclebasis::EdgeVector> pivots;
  long long total = 0;
  int got = 0;
  for (const Cycle& c : cycles) {
    cyclebasis::EdgeVector row = cyclebasis::EdgeVector::from_edges(g.edge_limit(), c);
    int lead = row.lowest_set();
    while (lead >= 0) {
      auto it = pivots.find(lead);
      if (it == pivots.end()) break;
      row ^= it->second;
      lead = row.lowest_set();
    }
    if (lead < 0) continue;
    pivots.emplace(lead, std::move(row));
    total += static_cast<long long>(c.size());
    if (++got == dim) return total;
  }
  throw std::logic_error("brute_force_mcb_total: cycles do not span");
}

// Shortest cycle length by scanning all simple cycles.
inline int brute_force_girth(const MultiGraph& g) {
  std::vector<Cycle> cycles = all_simple_cycles(g);
  if (cycles.empty()) throw std::invalid_argument("no cycle");
  std::size_t best = cycles.front().size();
  for (const Cycle& c : cycles) best = std::min(best, c.size());
  return static_cast<int>(best);
}

// Exact Cheeger constant by plain subset enumeration (no Gray code, no
// incremental updates): independent of the library implementation.
inline cyclebasis::Rational naive_cheeger(const MultiGraph& g) {
  std::vector<int> verts = g.live_vertices();
  int n = static_cast<int>(verts.size());
  if (n < 2 || n > 20) throw std::invalid_argument("naive_cheeger: 2 <= n <= 20");
  std::vector<int> index(g.vertex_limit(), -1);
  for (int i = 0; i < n; ++i) index[verts[i]] = i;
  long long best_num = -1, best_den = 1;
  for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
    int size = 0;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) ++size;
    if (size < 1 || 2 * size > n) continue;
    long long cut = 0;
    for (int e : g.live_edges()) {
      auto [u, v] = g.endpoints(e);
      if (u == v) continue;
      bool iu = mask >> index[u] & 1, iv = mask >> index[v] & 1;
      if (iu != iv) ++cut;
    }
    if (best_num < 0 || cut * best_den < best_num * size) {
      best_num = cut;
      best_den = size;
    }
  }
  long long d = std::gcd(best_num, best_den);
  return {best_num / d, best_den / d};
}

}  // namespace oracles
