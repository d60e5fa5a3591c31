#include "cyclebasis/engine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cyclebasis {

VariantConfig variant_config(int variant) {
  switch (variant) {
    case 0:
      return {RootSelect::random_vertex, CrossEdgeMode::first_encountered,
              RemovalStrategy::uniform_random};
    case 1:
      return {RootSelect::random_vertex, CrossEdgeMode::first_encountered,
              RemovalStrategy::max_load};
    case 2:
      return {RootSelect::max_load_vertex, CrossEdgeMode::first_encountered,
              RemovalStrategy::max_load};
    case 3:
      return {RootSelect::max_load_vertex, CrossEdgeMode::first_through_root,
              RemovalStrategy::max_load_prefer_root};
    case 4:
      return {RootSelect::max_load_vertex, CrossEdgeMode::first_through_root,
              RemovalStrategy::softmax};
    default:
      throw std::invalid_argument("variant must be 0..4");
  }
}

const char* variant_name(int variant) {
  static const char* names[] = {"v0", "v1", "v2", "v3", "v4"};
  if (variant < 0 || variant > 4) throw std::invalid_argument("variant must be 0..4");
  return names[variant];
}

int parse_variant(const std::string& name) {
  std::string s = name;
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (!s.empty() && s[0] == 'v') s.erase(0, 1);
  if (s.size() == 1 && s[0] >= '0' && s[0] <= '4') return s[0] - '0';
  throw std::invalid_argument("unknown variant '" + name + "' (expected v0..v4)");
}

namespace {

// Exact comparison of mean incident loads sum_a/deg_a ? sum_b/deg_b.
int compare_vertex_load(long long sum_a, int deg_a, long long sum_b, int deg_b) {
  long long lhs = sum_a * deg_b, rhs = sum_b * deg_a;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

}  // namespace

int select_root(const MultiGraph& g, const std::vector<long long>& edge_load,
                RootSelect mode, Rng& rng) {
  std::vector<int> live = g.live_vertices();
  if (live.empty()) throw std::invalid_argument("select_root: no live vertices");
  if (mode == RootSelect::random_vertex) return live[rng.index(live.size())];
  std::vector<int> best;
  long long best_sum = 0;
  int best_deg = 1;
  for (int v : live) {
    int deg = g.degree(v);
    if (deg == 0) continue;
    long long sum = 0;
    for (auto [e, w] : g.incident(v)) {
      (void)w;
      sum += edge_load.at(e);
    }
    if (best.empty()) {
      best = {v};
      best_sum = sum;
      best_deg = deg;
      continue;
    }
    int cmp = compare_vertex_load(sum, deg, best_sum, best_deg);
    if (cmp > 0) {
      best = {v};
      best_sum = sum;
      best_deg = deg;
    } else if (cmp == 0) {
      best.push_back(v);
    }
  }
  if (best.empty()) throw std::invalid_argument("select_root: no vertex with live edges");
  return best[rng.index(best.size())];
}

int select_cross_edge(const MultiGraph& g, const BfsResult& b, CrossEdgeMode mode) {
  if (b.cross_edges.empty())
    throw std::invalid_argument("select_cross_edge: BFS found no cross edge");
  if (mode == CrossEdgeMode::first_encountered) return b.cross_edges.front();
  for (int e : b.cross_edges) {
    auto [x, y] = g.endpoints(e);
    // The fundamental cycle passes through the root iff the endpoints' paths
    // meet only there.
    if (x == b.root || y == b.root || b.branch[x] != b.branch[y]) return e;
  }
  return b.cross_edges.front();
}

int select_removal_edge(const MultiGraph& g, const std::vector<int>& cycle,
                        const std::vector<long long>& edge_load,
                        RemovalStrategy strategy, int root, Rng& rng) {
  if (cycle.empty()) throw std::invalid_argument("select_removal_edge: empty cycle");
  auto argmax_load = [&](const std::vector<int>& edges) {
    std::vector<int> best;
    long long best_load = -1;
    for (int e : edges) {
      long long l = edge_load.at(e);
      if (l > best_load) {
        best_load = l;
        best = {e};
      } else if (l == best_load) {
        best.push_back(e);
      }
    }
    return best[rng.index(best.size())];
  };
  switch (strategy) {
    case RemovalStrategy::uniform_random:
      return cycle[rng.index(cycle.size())];
    case RemovalStrategy::max_load:
      return argmax_load(cycle);
    case RemovalStrategy::max_load_prefer_root: {
      std::vector<int> at_root;
      for (int e : cycle) {
        auto [u, v] = g.endpoints(e);
        if (u == root || v == root) at_root.push_back(e);
      }
      return argmax_load(at_root.empty() ? cycle : at_root);
    }
    case RemovalStrategy::softmax: {
      // weight(i) = 2^{L(i)}; computed relative to the max load so the
      // largest weight is exactly 1 and nothing overflows.
      long long max_load = 0;
      for (int e : cycle) max_load = std::max(max_load, edge_load.at(e));
      std::vector<double> weight(cycle.size());
      double total = 0;
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        weight[i] = std::exp2(static_cast<double>(edge_load.at(cycle[i]) - max_load));
        total += weight[i];
      }
      double r = rng.unit() * total;
      double acc = 0;
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        acc += weight[i];
        if (r < acc) return cycle[i];
      }
      return cycle.back();
    }
  }
  throw std::logic_error("select_removal_edge: bad strategy");
}

namespace {

class EngineRun {
 public:
  EngineRun(const MultiGraph& g, const VariantConfig& cfg, std::uint64_t seed)
      : orig_(g), work_(g), cfg_(cfg), rng_(seed) {
    int el = g.edge_limit();
    load_.assign(el, 0);
    exp_.resize(el);
    participation_.assign(el, 0);
    for (int e : work_.live_edges()) {
      auto [u, v] = work_.endpoints(e);
      exp_[e] = {u, v, {e}};
      if (u == v) loops_.insert(e);
    }
    for (int v : work_.live_vertices()) refresh_vertex(v);
  }

  std::pair<CycleBasis, RunStats> run() {
    while (work_.edge_count() > 0) {
      ++iter_;
      if (!loops_.empty())
        do_loop();
      else if (!deg1_.empty())
        do_case1();
      else if (!deg2_.empty())
        do_case2();
      else
        do_case3();
      if (cfg_.audit) audit();
    }
    for (int e : orig_.live_edges()) stats_.mu = std::max<int>(stats_.mu, participation_[e]);
    stats_.load_histogram.assign(stats_.mu + 1, 0);
    for (int e : orig_.live_edges()) ++stats_.load_histogram[participation_[e]];
    return {std::move(basis_), std::move(stats_)};
  }

 private:
  struct Expansion {
    int from = -1;
    int to = -1;
    std::vector<int> path;  // original edge ids, walk order from 'from' to 'to'
  };

  // --- bookkeeping ---------------------------------------------------------

  void refresh_vertex(int v) {
    deg1_.erase(v);
    deg2_.erase(v);
    if (!work_.vertex_alive(v)) return;
    int d = work_.degree(v);
    if (d == 0)
      work_.remove_vertex(v);  // housekeeping, not an iteration
    else if (d == 1)
      deg1_.insert(v);
    else if (d == 2)
      deg2_.insert(v);
  }

  void remove_working_edge(int e) {
    auto [u, v] = work_.endpoints(e);
    work_.remove_edge(e);
    loops_.erase(e);
    refresh_vertex(u);
    if (v != u) refresh_vertex(v);
  }

  int add_working_edge(int x, int y, long long load, Expansion exp) {
    int id = work_.add_edge(x, y);
    if (id >= static_cast<int>(load_.size())) {
      load_.resize(id + 1, 0);
      exp_.resize(id + 1);
    }
    load_[id] = load;
    exp_[id] = std::move(exp);
    refresh_vertex(x);
    refresh_vertex(y);
    return id;
  }

  // Expansion path of e oriented to start at vertex 'start'.
  std::vector<int> oriented_path(int e, int start) const {
    const Expansion& x = exp_[e];
    if (x.from == start) return x.path;
    if (x.to != start) throw std::logic_error("expansion orientation mismatch");
    return {x.path.rbegin(), x.path.rend()};
  }

  Cycle expand(const std::vector<int>& working_cycle) const {
    std::vector<int> ids;
    for (int e : working_cycle) {
      const auto& p = exp_[e].path;
      ids.insert(ids.end(), p.begin(), p.end());
    }
    std::sort(ids.begin(), ids.end());
    // Live expansions are pairwise disjoint, so nothing should cancel; fold
    // out duplicate pairs anyway to keep the output a well-formed GF(2) sum.
    Cycle out;
    for (std::size_t i = 0; i < ids.size();) {
      if (i + 1 < ids.size() && ids[i] == ids[i + 1]) {
        i += 2;
        continue;
      }
      out.push_back(ids[i]);
      ++i;
    }
    return out;
  }

  void emit(Cycle cycle, char origin, int working_len) {
    for (int e : cycle) ++participation_[e];
    basis_.cycles.push_back(std::move(cycle));
    basis_.meta.push_back({iter_, working_len, origin});
  }

  // --- cases ---------------------------------------------------------------

  void do_loop() {
    int e = *loops_.begin();
    emit(expand({e}), '2', 1);
    ++stats_.case2b;
    remove_working_edge(e);
  }

  void do_case1() {
    int v = *deg1_.begin();
    ++stats_.case1;
    remove_working_edge(work_.incident(v).front().first);
  }

  void do_case2() {
    int v = *deg2_.begin();
    const auto& inc = work_.incident(v);
    int e1 = inc[0].first, x = inc[0].second;
    int e2 = inc[1].first, y = inc[1].second;
    if (x == y) {
      // Both edges join v to the same vertex: the pair is itself a cycle.
      emit(expand({e1, e2}), '2', 2);
      ++stats_.case2b;
      remove_working_edge(e1);
      remove_working_edge(e2);
      return;
    }
    int xy = -1;  // lowest-id live edge joining x and y directly, if any
    for (auto [e, w] : work_.incident(x))
      if (w == y && (xy < 0 || e < xy)) xy = e;
    if (xy >= 0) {
      emit(expand({e1, e2, xy}), '2', 3);
      ++stats_.case2b;
      load_[xy] += 1;
      remove_working_edge(e1);
      remove_working_edge(e2);
      return;
    }
    ++stats_.case2a;
    Expansion merged;
    merged.from = x;
    merged.to = y;
    merged.path = oriented_path(e1, x);
    std::vector<int> tail = oriented_path(e2, v);
    merged.path.insert(merged.path.end(), tail.begin(), tail.end());
    long long load = std::max(load_[e1], load_[e2]);
    remove_working_edge(e1);
    remove_working_edge(e2);
    add_working_edge(x, y, load, std::move(merged));
  }

  void do_case3() {
    int root = select_root(work_, load_, cfg_.root, rng_);
    BfsResult b = bfs(work_, root);
    int ce = select_cross_edge(work_, b, cfg_.cross);
    std::vector<int> wcycle = cycle_from_cross_edge(work_, b, ce);
    int len = static_cast<int>(wcycle.size());
    stats_.case3_cycles.emplace_back(len, work_.vertex_count());
    stats_.max_case3_len = std::max(stats_.max_case3_len, len);
    emit(expand(wcycle), '3', len);
    for (int e : wcycle) load_[e] += 1;
    int rem = select_removal_edge(work_, wcycle, load_, cfg_.removal, root, rng_);
    remove_working_edge(rem);
    ++stats_.case3;
  }

  // --- debug audit ---------------------------------------------------------

  void audit() const {
    work_.audit();
    std::vector<char> covered(orig_.edge_limit(), 0);
    for (int e : work_.live_edges()) {
      auto [u, v] = work_.endpoints(e);
      const Expansion& x = exp_[e];
      if (x.from != u || x.to != v) throw std::logic_error("audit: expansion endpoints mismatch");
      int cur = x.from;
      for (int id : x.path) {
        if (covered[id]) throw std::logic_error("audit: expansions overlap");
        covered[id] = 1;
        auto [a, bb] = orig_.endpoints(id);
        if (a == cur)
          cur = bb;
        else if (bb == cur)
          cur = a;
        else
          throw std::logic_error("audit: expansion path is not a walk");
        // A working edge's recorded load bounds the participation of every
        // original edge it carries.
        if (participation_[id] > load_[e])
          throw std::logic_error("audit: participation exceeds carried load");
      }
      if (cur != x.to) throw std::logic_error("audit: expansion path endpoint mismatch");
    }
    for (int v : work_.live_vertices()) {
      int d = work_.degree(v);
      if ((d == 1) != (deg1_.count(v) > 0)) throw std::logic_error("audit: deg1 bucket stale");
      if ((d == 2) != (deg2_.count(v) > 0)) throw std::logic_error("audit: deg2 bucket stale");
    }
  }

  const MultiGraph& orig_;
  MultiGraph work_;
  VariantConfig cfg_;
  Rng rng_;
  std::vector<long long> load_;
  std::vector<Expansion> exp_;
  std::vector<long long> participation_;
  std::set<int> loops_, deg1_, deg2_;
  long long iter_ = 0;
  CycleBasis basis_;
  RunStats stats_;
};

}  // namespace

std::pair<CycleBasis, RunStats> build_cycle_basis(const MultiGraph& g,
                                                  const VariantConfig& cfg,
                                                  std::uint64_t seed) {
  return EngineRun(g, cfg, seed).run();
}

}  // namespace cyclebasis
