#pragma once

#include <cstdint>
#include <vector>

namespace cyclebasis {

// Proxy process for the recursion's Case-3 load dynamics. One iteration on m
// buckets with k = 2*ceil(log2(n)), n = (2/3)m: pick the 3 most heavily
// loaded buckets (ties uniform) plus k-3 distinct uniformly random others,
// add one ball to each, then delete the 3 most heavily loaded buckets
// post-addition (ties uniform); m shrinks by 3. Runs until m <= m_min or
// k > m (early_stop).
struct Process1Result {
  struct Step {
    int iteration;
    int m;         // bucket count at the start of the iteration
    int k;
    int max_load;  // over live buckets after the iteration's deletion
  };
  std::vector<Step> trajectory;
  std::vector<long long> loads;  // live buckets at termination, non-increasing
  int max_load = 0;              // == loads.front() unless empty
  bool early_stop = false;
};

Process1Result process1(int initial_buckets, int m_min, std::uint64_t seed);

// Delayed-removal variant: while m > M/2^j (epoch j = 1, 2, ...), rounds
// place balls with k frozen at the epoch-start value (either k or k-3 random
// distinct buckets per round, flavor below) and only decrement the counter
// m; at epoch end the r = (epoch start m) - m most heavily loaded buckets
// are deleted (ties uniform). Per epoch, a bucket is "bad" if it gained
// <= bad_c * k/6 balls; alpha = (1-bad_c)^2 / (6 ln 2).
enum class BallsPerRound { k_full, k_minus_3 };

struct EpochStats {
  int epoch;
  int m_start;  // live buckets during the epoch
  int k;
  int rounds;
  double mu;         // k / 6, the nominal per-bucket expectation
  double mean_gain;  // balls placed / m_start (exact empirical mean)
  int bad_buckets;   // gained <= bad_c * (k/6)
  int max_load_end;  // over live buckets after the epoch's deletion
};

struct Process2Result {
  std::vector<EpochStats> epochs;
  std::vector<long long> loads;  // live buckets at termination, non-increasing
  int max_load = 0;
  bool early_stop = false;
  double bad_c = 0.1;
};

Process2Result process2(int initial_buckets, int m_min, std::uint64_t seed,
                        double bad_c = 0.1,
                        BallsPerRound flavor = BallsPerRound::k_full);

// Lower bound (c^2/6) * (1 - c/2) * log2(M)^2 on the terminal max load of
// the delayed-removal process, valid for c in (0, 0.16).
double theorem_bound(double c, double M);

// One coupled experiment on a shared randomness stream: m/6 rounds with k
// balls each. P1 deletes its 3 heaviest live buckets (ties uniform) at the
// start of each round and redirects balls addressed to dead buckets to
// uniform random live ones; P1a keeps every bucket alive, places each ball
// at its drawn address, and marks the buckets P1 deleted (so both end with
// the same survivor set); P2 also places every ball at its address and
// deletes the m/2 heaviest at the very end. Returns the survivors' load
// vectors (length m/2) sorted non-increasing; the coupling guarantees
// p1 >= p1a >= p2 entrywise. Requires m divisible by 6, 3 < k, k - 3 <= m.
struct CoupledResult {
  std::vector<long long> p1, p1a, p2;
  long long total_balls = 0;  // balls thrown by P1a/P2 = (m/6)(k-3)
  bool dominates() const;
};

CoupledResult coupled_run(int m, int k, std::uint64_t seed);

}  // namespace cyclebasis
