#include "cyclebasis/randgraph.hpp"

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cyclebasis/rng.hpp"

namespace cyclebasis {

namespace {

// One pairing attempt. Keeps a pool of unmatched stubs (vertex repeated once
// per missing edge) and joins uniform random pairs, rejecting self-loops and
// duplicates; when the remaining pool admits no suitable pair the attempt is
// abandoned. Returns the edge set or nothing.
bool try_pairing(int n, int d, Rng& rng, std::vector<std::pair<int, int>>& out) {
  std::vector<int> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * d);
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < d; ++i) stubs.push_back(v);
  std::set<std::pair<int, int>> present;
  out.clear();
  while (!stubs.empty()) {
    bool progressed = false;
    // With stubs uniformly shuffled, scanning adjacent disjoint pairs is a
    // uniform random perfect matching of the pool; suitable pairs are kept.
    rng.shuffle(stubs);
    std::vector<int> leftover;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v) {
        leftover.push_back(u);
        leftover.push_back(v);
        continue;
      }
      auto key = std::minmax(u, v);
      if (present.count({key.first, key.second})) {
        leftover.push_back(u);
        leftover.push_back(v);
        continue;
      }
      present.insert({key.first, key.second});
      out.emplace_back(u, v);
      progressed = true;
    }
    if (stubs.size() % 2 != 0) leftover.push_back(stubs.back());
    if (!progressed) {
      // No pair in this matching was suitable; check whether any suitable
      // pair exists at all before declaring the attempt dead.
      bool any = false;
      for (std::size_t i = 0; i < leftover.size() && !any; ++i)
        for (std::size_t j = i + 1; j < leftover.size() && !any; ++j) {
          int u = leftover[i], v = leftover[j];
          if (u == v) continue;
          auto key = std::minmax(u, v);
          if (!present.count({key.first, key.second})) any = true;
        }
      if (!any) return false;
    }
    stubs = std::move(leftover);
  }
  return true;
}

}  // namespace

MultiGraph random_regular(int n, int d, std::uint64_t seed) {
  if (n <= 0 || d < 0) throw std::invalid_argument("random_regular: need n > 0, d >= 0");
  if (d >= n) throw std::invalid_argument("random_regular: need d < n");
  if ((static_cast<long long>(n) * d) % 2 != 0)
    throw std::invalid_argument("random_regular: n*d must be even");
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    if (try_pairing(n, d, rng, edges)) {
      MultiGraph g(n);
      for (auto [u, v] : edges) g.add_edge(u, v);
      return g;
    }
  }
  throw std::runtime_error("random_regular: retry bound exhausted");
}

MultiGraph random_regular_connected(int n, int d, std::uint64_t seed) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    MultiGraph g = random_regular(n, d, mix64(seed, attempt));
    if (g.connected()) return g;
  }
  throw std::runtime_error("random_regular_connected: retry bound exhausted");
}

MultiGraph random_gnp(int n, double p, std::uint64_t seed) {
  if (n < 0 || p < 0.0 || p > 1.0) throw std::invalid_argument("random_gnp: bad arguments");
  Rng rng(seed);
  MultiGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.unit() < p) g.add_edge(u, v);
  return g;
}

}  // namespace cyclebasis
