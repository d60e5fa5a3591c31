#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclebasis/engine.hpp"
#include "cyclebasis/multigraph.hpp"

namespace cyclebasis {

struct ScheduleEntry {
  int n;
  int d;
  int trials;
};

// Default sweep: n in {32..1024} x d in {3,8}, trial counts scaled to desk
// runtimes (a tenth of the full schedule, floor 20).
std::vector<ScheduleEntry> desk_schedule();
// The full-size sweep (n up to 16384 for d=3, 8192 for d=8); expect days.
std::vector<ScheduleEntry> full_schedule();

struct TrialRecord {
  int n = 0;
  int d = 0;
  int variant = 0;
  std::uint64_t seed = 0;  // trial seed (drives graph and engine streams)
  int mu = 0;
  long long case1 = 0, case2a = 0, case2b = 0, case3 = 0;
  int max_case3_len = 0;
  double runtime_ms = 0.0;
};

struct AggregateRow {
  int n = 0;
  int d = 0;
  int variant = 0;  // 0..4, or 5 for the minimum-basis baseline
  int trials = 0;
  double median_mu = 0, q1 = 0, q3 = 0;
  double whisker_lo = 0, whisker_hi = 0;  // 1.5*IQR fences, clamped to data
  int outliers = 0;
  double pct_case1 = 0, pct_case2a = 0, pct_case2b = 0, pct_case3 = 0;
};

struct RunScheduleResult {
  std::vector<TrialRecord> raw;       // ordered by (entry, trial, variant)
  std::vector<AggregateRow> rows;     // ordered by (entry, variant)
};

// Thrown when a produced basis fails verification; carries the coordinates
// needed to reproduce the failure.
struct VerificationError : std::runtime_error {
  VerificationError(int n_, int d_, int variant_, std::uint64_t seed_,
                    const std::string& what_);
  int n, d, variant;
  std::uint64_t seed;
};

// Runs every (entry, trial, variant) combination: the trial seed
// (base_seed + trial index) fixes the graph, so all variants of a trial see
// the same graph; each produced basis is verified (basis + weakly
// fundamental) and any failure aborts with VerificationError. jobs > 1
// distributes trials over threads; results are identical to the serial order.
RunScheduleResult run_schedule(const std::vector<ScheduleEntry>& entries,
                               const std::vector<int>& variants,
                               std::uint64_t base_seed, int jobs);

// Mean case shares (fractions of iterations, summing to 1) of a variant at
// (n, d) over `trials` verified runs.
std::array<double, 4> case_frequency_report(int n, int d, int variant,
                                            int trials, std::uint64_t base_seed,
                                            int jobs);

enum class FitModel { log2_n, log2_squared_n };

struct FitResult {
  double c = 0;                 // least-squares coefficient of c * f(n)
  std::vector<double> ratios;   // mu_i / (c * f(n_i)), input order
};

// Fits mu ~ c * f(n) by least squares through the origin over (n, mu) points.
FitResult fit_coefficient(const std::vector<std::pair<double, double>>& points,
                          FitModel model);

// Quartile of sorted data by linear interpolation (the numpy default).
double quantile_sorted(const std::vector<double>& sorted, double q);

AggregateRow aggregate_trials(int n, int d, int variant,
                              const std::vector<TrialRecord>& trials);

// Benchmarks a user-supplied graph: v0 and v3 over `trials` engine seeds
// plus the (deterministic, single-evaluation) minimum cycle basis as
// variant 5. Every basis is verified.
std::vector<AggregateRow> run_on_file(const std::string& path, int trials,
                                      std::uint64_t base_seed, int jobs);

}  // namespace cyclebasis
