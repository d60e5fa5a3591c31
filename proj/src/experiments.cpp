#include "cyclebasis/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <thread>

#include "cyclebasis/baselines.hpp"
#include "cyclebasis/gf2.hpp"
#include "cyclebasis/randgraph.hpp"
#include "cyclebasis/rng.hpp"

namespace cyclebasis {

namespace {

std::vector<ScheduleEntry> table(int divisor) {
  auto scale = [&](int t) { return std::max(20, t / divisor); };
  std::vector<ScheduleEntry> entries;
  const std::vector<std::pair<int, int>> d3 = {
      {32, 4000}, {64, 4000},  {128, 4000}, {256, 2000},  {512, 1000},
      {1024, 500}, {2048, 250}, {4096, 100}, {8192, 50},   {16384, 20}};
  const std::vector<std::pair<int, int>> d8 = {
      {32, 4000}, {64, 4000}, {128, 2000}, {256, 1000}, {512, 500},
      {1024, 250}, {2048, 100}, {4096, 50}, {8192, 20}};
  for (auto [n, t] : d3) entries.push_back({n, 3, scale(t)});
  for (auto [n, t] : d8) entries.push_back({n, 8, scale(t)});
  return entries;
}

}  // namespace

std::vector<ScheduleEntry> desk_schedule() {
  std::vector<ScheduleEntry> all = table(10), out;
  for (const auto& e : all)
    if (e.n <= 1024) out.push_back(e);
  return out;
}

std::vector<ScheduleEntry> full_schedule() { return table(1); }

VerificationError::VerificationError(int n_, int d_, int variant_,
                                     std::uint64_t seed_, const std::string& what_)
    : std::runtime_error("basis verification failed at n=" + std::to_string(n_) +
                         " d=" + std::to_string(d_) + " variant=v" +
                         std::to_string(variant_) + " seed=" + std::to_string(seed_) +
                         ": " + what_),
      n(n_), d(d_), variant(variant_), seed(seed_) {}

namespace {

std::uint64_t trial_seed(std::uint64_t base_seed, int trial) {
  return base_seed + static_cast<std::uint64_t>(trial);
}

void verify_or_throw(const MultiGraph& g, const CycleBasis& basis, int n, int d,
                     int variant, std::uint64_t seed) {
  BasisReport rep = verify_basis(g, basis.cycles);
  if (!rep.is_basis)
    throw VerificationError(n, d, variant, seed,
                            rep.detail.empty() ? "not a basis" : rep.detail);
  if (!verify_weakly_fundamental(basis.cycles))
    throw VerificationError(n, d, variant, seed, "basis is not weakly fundamental");
}

TrialRecord run_one(const MultiGraph& g, int n, int d, int variant,
                    std::uint64_t tseed) {
  VariantConfig cfg = variant_config(variant);
  auto t0 = std::chrono::steady_clock::now();
  auto [basis, stats] = build_cycle_basis(g, cfg, mix64(tseed, variant));
  auto t1 = std::chrono::steady_clock::now();
  verify_or_throw(g, basis, n, d, variant, tseed);
  TrialRecord rec;
  rec.n = n;
  rec.d = d;
  rec.variant = variant;
  rec.seed = tseed;
  rec.mu = stats.mu;
  rec.case1 = stats.case1;
  rec.case2a = stats.case2a;
  rec.case2b = stats.case2b;
  rec.case3 = stats.case3;
  rec.max_case3_len = stats.max_case3_len;
  rec.runtime_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rec;
}

struct Task {
  int n, d, trial;
  std::uint64_t seed;
};

// Runs fn(task) over tasks, in parallel when jobs > 1, preserving task order
// in the output slots. First thrown error (by task index) is rethrown.
template <typename Fn>
void run_tasks(const std::vector<Task>& tasks, int jobs, Fn&& fn) {
  if (jobs <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  std::size_t err_index = tasks.size();
  std::exception_ptr err;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (i < err_index) {
          err_index = i;
          err = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  int count = std::min<int>(jobs, static_cast<int>(tasks.size()));
  pool.reserve(count);
  for (int t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace

double quantile_sorted(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) throw std::invalid_argument("quantile of empty data");
  if (sorted.size() == 1) return sorted[0];
  double pos = q * static_cast<double>(sorted.size() - 1);
  std::size_t lo = static_cast<std::size_t>(pos);
  if (lo >= sorted.size() - 1) return sorted.back();
  double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

AggregateRow aggregate_trials(int n, int d, int variant,
                              const std::vector<TrialRecord>& trials) {
  AggregateRow row;
  row.n = n;
  row.d = d;
  row.variant = variant;
  row.trials = static_cast<int>(trials.size());
  std::vector<double> mu;
  mu.reserve(trials.size());
  double s1 = 0, s2a = 0, s2b = 0, s3 = 0;
  for (const TrialRecord& t : trials) {
    mu.push_back(t.mu);
    double iters = static_cast<double>(t.case1 + t.case2a + t.case2b + t.case3);
    if (iters > 0) {
      s1 += t.case1 / iters;
      s2a += t.case2a / iters;
      s2b += t.case2b / iters;
      s3 += t.case3 / iters;
    }
  }
  std::sort(mu.begin(), mu.end());
  row.median_mu = quantile_sorted(mu, 0.5);
  row.q1 = quantile_sorted(mu, 0.25);
  row.q3 = quantile_sorted(mu, 0.75);
  double iqr = row.q3 - row.q1;
  double lo_fence = row.q1 - 1.5 * iqr, hi_fence = row.q3 + 1.5 * iqr;
  row.whisker_lo = mu.back();
  row.whisker_hi = mu.front();
  for (double v : mu) {
    if (v >= lo_fence) {
      row.whisker_lo = std::min(row.whisker_lo, v);
      break;
    }
  }
  for (auto it = mu.rbegin(); it != mu.rend(); ++it) {
    if (*it <= hi_fence) {
      row.whisker_hi = std::max(row.whisker_hi, *it);
      break;
    }
  }
  for (double v : mu)
    if (v < lo_fence || v > hi_fence) ++row.outliers;
  if (!trials.empty()) {
    double inv = 1.0 / static_cast<double>(trials.size());
    row.pct_case1 = 100.0 * s1 * inv;
    row.pct_case2a = 100.0 * s2a * inv;
    row.pct_case2b = 100.0 * s2b * inv;
    row.pct_case3 = 100.0 * s3 * inv;
  }
  return row;
}

RunScheduleResult run_schedule(const std::vector<ScheduleEntry>& entries,
                               const std::vector<int>& variants,
                               std::uint64_t base_seed, int jobs) {
  std::vector<Task> tasks;
  for (const ScheduleEntry& e : entries)
    for (int t = 0; t < e.trials; ++t)
      tasks.push_back({e.n, e.d, t, trial_seed(base_seed, t)});
  std::vector<std::vector<TrialRecord>> slots(tasks.size());
  run_tasks(tasks, jobs, [&](std::size_t i) {
    const Task& task = tasks[i];
    MultiGraph g = random_regular_connected(task.n, task.d, task.seed);
    for (int v : variants) slots[i].push_back(run_one(g, task.n, task.d, v, task.seed));
  });
  RunScheduleResult res;
  for (const auto& s : slots) res.raw.insert(res.raw.end(), s.begin(), s.end());
  std::size_t cursor = 0;
  for (const ScheduleEntry& e : entries) {
    std::vector<std::vector<TrialRecord>> per_variant(variants.size());
    for (int t = 0; t < e.trials; ++t)
      for (std::size_t vi = 0; vi < variants.size(); ++vi)
        per_variant[vi].push_back(slots[cursor + t][vi]);
    cursor += e.trials;
    for (std::size_t vi = 0; vi < variants.size(); ++vi)
      res.rows.push_back(aggregate_trials(e.n, e.d, variants[vi], per_variant[vi]));
  }
  return res;
}

std::array<double, 4> case_frequency_report(int n, int d, int variant,
                                            int trials, std::uint64_t base_seed,
                                            int jobs) {
  RunScheduleResult r = run_schedule({{n, d, trials}}, {variant}, base_seed, jobs);
  const AggregateRow& row = r.rows.at(0);
  return {row.pct_case1 / 100.0, row.pct_case2a / 100.0, row.pct_case2b / 100.0,
          row.pct_case3 / 100.0};
}

FitResult fit_coefficient(const std::vector<std::pair<double, double>>& points,
                          FitModel model) {
  if (points.size() < 2) throw std::invalid_argument("fit_coefficient: need at least 2 points");
  for (auto [n, mu] : points) {
    (void)mu;
    if (n < 2) throw std::invalid_argument("fit_coefficient: points need n >= 2");
  }
  auto f = [&](double n) {
    double l = std::log2(n);
    return model == FitModel::log2_n ? l : l * l;
  };
  double num = 0, den = 0;
  for (auto [n, mu] : points) {
    double fx = f(n);
    num += mu * fx;
    den += fx * fx;
  }
  if (den == 0) throw std::invalid_argument("fit_coefficient: degenerate design");
  FitResult res;
  res.c = num / den;
  for (auto [n, mu] : points) res.ratios.push_back(mu / (res.c * f(n)));
  return res;
}

std::vector<AggregateRow> run_on_file(const std::string& path, int trials,
                                      std::uint64_t base_seed, int jobs) {
  MultiGraph g = read_edge_list_file(path);
  std::vector<AggregateRow> rows;
  int n = g.vertex_count();
  // d column: mean degree, rounded; informational only for file runs.
  int d = n > 0 ? static_cast<int>(std::lround(2.0 * g.edge_count() / n)) : 0;
  std::vector<Task> tasks;
  for (int t = 0; t < trials; ++t)
    tasks.push_back({n, d, t, trial_seed(base_seed, t)});
  for (int variant : {0, 3}) {
    std::vector<TrialRecord> recs(tasks.size());
    run_tasks(tasks, jobs, [&](std::size_t i) {
      recs[i] = run_one(g, n, d, variant, tasks[i].seed);
    });
    rows.push_back(aggregate_trials(n, d, variant, recs));
  }
  // The minimum-basis baseline is deterministic: trials collapse to one
  // evaluation.
  CycleBasis mcb = min_weight_cycle_basis(g);
  BasisReport rep = verify_basis(g, mcb.cycles);
  if (!rep.is_basis)
    throw VerificationError(n, d, 5, base_seed,
                            rep.detail.empty() ? "not a basis" : rep.detail);
  TrialRecord rec;
  rec.n = n;
  rec.d = d;
  rec.variant = 5;
  rec.seed = base_seed;
  rec.mu = max_edge_participation(mcb.cycles);
  rows.push_back(aggregate_trials(n, d, 5, {rec}));
  return rows;
}

}  // namespace cyclebasis
