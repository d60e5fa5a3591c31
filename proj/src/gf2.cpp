#include "cyclebasis/gf2.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <stdexcept>

namespace cyclebasis {

EdgeVector& EdgeVector::operator^=(const EdgeVector& o) {
  if (bits_ != o.bits_) throw std::invalid_argument("EdgeVector size mismatch");
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  return *this;
}

bool EdgeVector::any() const {
  for (auto w : w_)
    if (w) return true;
  return false;
}

int EdgeVector::popcount() const {
  int c = 0;
  for (auto w : w_) c += std::popcount(w);
  return c;
}

int EdgeVector::lowest_set() const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
  return -1;
}

bool EdgeVector::value_less(const EdgeVector& o) const {
  if (bits_ != o.bits_) throw std::invalid_argument("EdgeVector size mismatch");
  for (std::size_t i = w_.size(); i-- > 0;)
    if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
  return false;
}

EdgeVector EdgeVector::from_edges(int bits, const std::vector<int>& ids) {
  EdgeVector v(bits);
  for (int e : ids) {
    if (e < 0 || e >= bits) throw std::out_of_range("edge id out of range");
    if (v.test(e)) throw std::invalid_argument("duplicate edge id in cycle");
    v.set(e);
  }
  return v;
}

std::vector<int> EdgeVector::to_edges() const {
  std::vector<int> out;
  for (int i = 0; i < bits_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

int gf2_rank(std::vector<EdgeVector> rows) {
  // pivot edge id -> index of the row holding that pivot
  std::map<int, int> pivots;
  int rank = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    int lead = rows[i].lowest_set();
    while (lead >= 0) {
      auto it = pivots.find(lead);
      if (it == pivots.end()) break;
      rows[i] ^= rows[it->second];
      lead = rows[i].lowest_set();
    }
    if (lead >= 0) {
      pivots.emplace(lead, static_cast<int>(i));
      ++rank;
    }
  }
  return rank;
}

namespace {

// nonempty + all live + even degree at every vertex + connected support
bool is_cycle(const MultiGraph& g, const Cycle& c, std::string& why) {
  if (c.empty()) {
    why = "empty cycle";
    return false;
  }
  std::map<int, int> deg;  // vertex -> degree in the support
  for (std::size_t i = 0; i < c.size(); ++i) {
    int e = c[i];
    if (e < 0 || e >= g.edge_limit()) {
      why = "edge id out of range";
      return false;
    }
    if (!g.edge_alive(e)) {
      why = "cycle uses a removed edge";
      return false;
    }
    if (i > 0 && c[i] == c[i - 1]) {
      why = "duplicate edge id in cycle";
      return false;
    }
    auto [u, v] = g.endpoints(e);
    deg[u] += (u == v) ? 2 : 1;
    if (u != v) deg[v] += 1;
  }
  for (auto [v, d] : deg) {
    (void)v;
    if (d % 2 != 0) {
      why = "odd degree in cycle support";
      return false;
    }
  }
  // connectivity of the support via BFS over the cycle's edges
  std::map<int, std::vector<std::pair<int, int>>> adj;
  for (int e : c) {
    auto [u, v] = g.endpoints(e);
    adj[u].emplace_back(e, v);
    if (u != v) adj[v].emplace_back(e, u);
  }
  std::map<int, char> seen;
  std::deque<int> queue{deg.begin()->first};
  seen[deg.begin()->first] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (auto [e, w] : adj[v]) {
      (void)e;
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  if (seen.size() != deg.size()) {
    why = "cycle support is disconnected";
    return false;
  }
  return true;
}

}  // namespace

BasisReport verify_basis(const MultiGraph& g, const std::vector<Cycle>& basis) {
  BasisReport rep;
  rep.expected_dim = g.edge_count() - g.vertex_count() + g.component_count();
  rep.is_cycles = true;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Cycle sorted = basis[i];
    std::sort(sorted.begin(), sorted.end());
    std::string why;
    if (!is_cycle(g, sorted, why)) {
      rep.is_cycles = false;
      rep.detail = "cycle " + std::to_string(i) + ": " + why;
      break;
    }
  }
  std::vector<EdgeVector> rows;
  rows.reserve(basis.size());
  for (const Cycle& c : basis) {
    EdgeVector v(g.edge_limit());
    for (int e : c)
      if (e >= 0 && e < g.edge_limit()) v.flip(e);
    rows.push_back(std::move(v));
  }
  rep.rank = gf2_rank(std::move(rows));
  rep.independent = rep.rank == static_cast<int>(basis.size());
  if (!rep.independent && rep.detail.empty())
    rep.detail = "rank " + std::to_string(rep.rank) + " < " + std::to_string(basis.size()) + " cycles";
  if (rep.rank != rep.expected_dim && rep.detail.empty())
    rep.detail = "rank " + std::to_string(rep.rank) + " != cycle space dimension " +
                 std::to_string(rep.expected_dim);
  rep.is_basis = rep.is_cycles && rep.independent && rep.rank == rep.expected_dim;
  return rep;
}

int max_edge_participation(const std::vector<Cycle>& basis) {
  std::map<int, int> count;
  for (const Cycle& c : basis)
    for (int e : c) ++count[e];
  int mu = 0;
  for (auto [e, k] : count) {
    (void)e;
    mu = std::max(mu, k);
  }
  return mu;
}

std::vector<long long> participation_histogram(const MultiGraph& g,
                                               const std::vector<Cycle>& basis) {
  std::vector<int> count(g.edge_limit(), 0);
  for (const Cycle& c : basis)
    for (int e : c) ++count.at(e);
  int mu = 0;
  for (int e : g.live_edges()) mu = std::max(mu, count[e]);
  std::vector<long long> hist(mu + 1, 0);
  for (int e : g.live_edges()) ++hist[count[e]];
  return hist;
}

bool verify_weakly_fundamental(const std::vector<Cycle>& basis) {
  // A family admits a weakly fundamental ordering iff cycles can be peeled
  // one at a time, each owning an edge private to it among the survivors
  // (peel order is free: dropping a cycle from a valid ordering keeps it
  // valid, so the greedy never paints itself into a corner). The peels, read
  // in reverse, are the witness ordering.
  std::map<int, int> count;                       // live occurrences per edge
  std::map<int, std::vector<std::size_t>> users;  // cycles containing an edge
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (int e : basis[i]) {
      ++count[e];
      users[e].push_back(i);
    }
  }
  std::vector<char> queued(basis.size(), 0), alive(basis.size(), 1);
  std::vector<std::size_t> queue;  // cycles that own a private edge
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (int e : basis[i])
      if (count[e] == 1 && !queued[i]) {
        queued[i] = 1;
        queue.push_back(i);
      }
  std::size_t peeled = 0;
  while (!queue.empty()) {
    // counts only decrease, so a queued cycle still owns its private edge
    std::size_t i = queue.back();
    queue.pop_back();
    alive[i] = 0;
    ++peeled;
    for (int e : basis[i]) {
      if (--count[e] != 1) continue;
      for (std::size_t j : users[e])  // exactly one survivor holds e now
        if (alive[j] && !queued[j]) {
          queued[j] = 1;
          queue.push_back(j);
        }
    }
  }
  return peeled == basis.size();
}

int girth(const MultiGraph& g) {
  // min over roots r of min over non-tree edges (u,w) of d(u) + d(w) + 1,
  // exact on multigraphs: self-loops give 1, parallel pairs give 2 when the
  // BFS is rooted at an endpoint.
  int best = -1;
  for (int r : g.live_vertices()) {
    BfsResult b = bfs(g, r);
    for (int e : b.cross_edges) {
      auto [u, w] = g.endpoints(e);
      int len = b.depth[u] + b.depth[w] + 1;
      if (best < 0 || len < best) best = len;
    }
  }
  if (best < 0) throw std::invalid_argument("girth: graph has no cycle");
  return best;
}

Rational participation_lower_bound(const MultiGraph& g) {
  if (!g.connected()) throw std::invalid_argument("participation_lower_bound: graph must be connected");
  int m = g.edge_count();
  int n = g.vertex_count();
  if (m - n + 1 <= 0) return {0, 1};
  return {static_cast<long long>(girth(g)) * (m - n + 1), m};
}

}  // namespace cyclebasis
