#include "cyclebasis/ballsbins.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "cyclebasis/rng.hpp"

namespace cyclebasis {

namespace {

int ceil_log2(long long x) {
  if (x <= 1) return 0;
  return static_cast<int>(std::bit_width(static_cast<std::uint64_t>(x - 1)));
}

// k = 2 * ceil(log2(n)) with n = (2/3) m; exact when 2m/3 is integral.
int balls_k(long long m) {
  if ((2 * m) % 3 == 0) return 2 * ceil_log2(2 * m / 3);
  return 2 * static_cast<int>(std::ceil(std::log2(2.0 * static_cast<double>(m) / 3.0)));
}

// Indices (into idx) of the `count` heaviest entries, ties uniform: entries
// strictly above the count-th largest value are certain, the remainder is a
// uniform draw from the entries equal to it.
std::vector<int> pick_top(const std::vector<long long>& loads,
                          const std::vector<int>& idx, int count, Rng& rng) {
  std::vector<long long> values;
  values.reserve(idx.size());
  for (int i : idx) values.push_back(loads[i]);
  std::nth_element(values.begin(), values.begin() + (count - 1), values.end(),
                   std::greater<long long>());
  long long threshold = values[count - 1];
  std::vector<int> out, ties;
  for (int i : idx) {
    if (loads[i] > threshold)
      out.push_back(i);
    else if (loads[i] == threshold)
      ties.push_back(i);
  }
  int need = count - static_cast<int>(out.size());
  for (int j = 0; j < need; ++j) {
    std::size_t pick = j + rng.below(ties.size() - j);
    std::swap(ties[j], ties[pick]);
    out.push_back(ties[j]);
  }
  return out;
}

std::vector<int> iota_vec(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

// `count` distinct indices in [0, n) avoiding marked ones, by rejection.
std::vector<int> sample_distinct(int n, int count, std::vector<char>& marked,
                                 Rng& rng) {
  std::vector<int> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    int i = static_cast<int>(rng.below(n));
    if (marked[i]) continue;
    marked[i] = 1;
    out.push_back(i);
  }
  return out;
}

void remove_indices(std::vector<long long>& loads, std::vector<int> victims) {
  std::sort(victims.begin(), victims.end(), std::greater<int>());
  for (int i : victims) {
    loads[i] = loads.back();
    loads.pop_back();
  }
}

}  // namespace

Process1Result process1(int initial_buckets, int m_min, std::uint64_t seed) {
  if (m_min < 3) throw std::invalid_argument("process1: m_min must be at least 3");
  if (initial_buckets <= m_min) throw std::invalid_argument("process1: need M > m_min");
  Rng rng(seed);
  std::vector<long long> loads(initial_buckets, 0);
  Process1Result res;
  int iteration = 0;
  while (static_cast<int>(loads.size()) > m_min) {
    int m = static_cast<int>(loads.size());
    int k = balls_k(m);
    if (k > m) {
      res.early_stop = true;
      break;
    }
    ++iteration;
    std::vector<int> all = iota_vec(m);
    std::vector<int> chosen = pick_top(loads, all, 3, rng);
    std::vector<char> marked(m, 0);
    for (int i : chosen) marked[i] = 1;
    std::vector<int> extra = sample_distinct(m, k - 3, marked, rng);
    chosen.insert(chosen.end(), extra.begin(), extra.end());
    for (int i : chosen) ++loads[i];
    remove_indices(loads, pick_top(loads, all, 3, rng));
    long long mx = 0;
    for (long long l : loads) mx = std::max(mx, l);
    res.trajectory.push_back({iteration, m, k, static_cast<int>(mx)});
  }
  std::sort(loads.begin(), loads.end(), std::greater<long long>());
  res.loads = std::move(loads);
  if (!res.loads.empty()) res.max_load = static_cast<int>(res.loads.front());
  return res;
}

Process2Result process2(int initial_buckets, int m_min, std::uint64_t seed,
                        double bad_c, BallsPerRound flavor) {
  if (m_min < 3) throw std::invalid_argument("process2: m_min must be at least 3");
  if (initial_buckets <= m_min) throw std::invalid_argument("process2: need M > m_min");
  Rng rng(seed);
  std::vector<long long> loads(initial_buckets, 0);
  Process2Result res;
  res.bad_c = bad_c;
  const long long M = initial_buckets;
  int j = 0;
  while (static_cast<int>(loads.size()) > m_min) {
    ++j;
    int m_old = static_cast<int>(loads.size());
    int k = balls_k(m_old);
    int balls = (flavor == BallsPerRound::k_full) ? k : k - 3;
    if (balls > m_old || balls <= 0) {
      res.early_stop = true;
      break;
    }
    long long counter = m_old;
    int rounds = 0;
    std::vector<int> gained(m_old, 0);
    // epoch j runs while the counter exceeds M / 2^j (compared exactly)
    while (j < 62 && counter * (1LL << j) > M) {
      std::vector<char> marked(m_old, 0);
      for (int i : sample_distinct(m_old, balls, marked, rng)) {
        ++loads[i];
        ++gained[i];
      }
      counter -= 3;
      ++rounds;
    }
    if (rounds == 0) {
      res.early_stop = true;  // degenerate geometry; cannot make progress
      break;
    }
    int r = std::min<int>(m_old - static_cast<int>(counter), m_old);
    double mu = k / 6.0;
    int bad = 0;
    for (int gi : gained)
      if (gi <= bad_c * mu) ++bad;
    remove_indices(loads, pick_top(loads, iota_vec(m_old), r, rng));
    long long mx = 0;
    for (long long l : loads) mx = std::max(mx, l);
    res.epochs.push_back({j, m_old, k, rounds, mu,
                          static_cast<double>(balls) * rounds / m_old, bad,
                          static_cast<int>(mx)});
  }
  std::sort(loads.begin(), loads.end(), std::greater<long long>());
  res.loads = std::move(loads);
  if (!res.loads.empty()) res.max_load = static_cast<int>(res.loads.front());
  return res;
}

double theorem_bound(double c, double M) {
  if (!(c > 0.0 && c < 0.16))
    throw std::domain_error("theorem_bound: c must lie in (0, 0.16)");
  if (!(M > 1.0)) throw std::domain_error("theorem_bound: M must exceed 1");
  double lg = std::log2(M);
  return (c * c / 6.0) * (1.0 - c / 2.0) * lg * lg;
}

bool CoupledResult::dominates() const {
  if (p1.size() != p1a.size() || p1a.size() != p2.size()) return false;
  for (std::size_t i = 0; i < p1.size(); ++i)
    if (p1[i] < p1a[i] || p1a[i] < p2[i]) return false;
  return true;
}

CoupledResult coupled_run(int m, int k, std::uint64_t seed) {
  CoupledResult res;
  if (m == 0) return res;
  if (m < 0 || m % 6 != 0) throw std::invalid_argument("coupled_run: m must be divisible by 6");
  if (k <= 3 || k - 3 > m) throw std::invalid_argument("coupled_run: need 3 < k and k-3 <= m");
  Rng rng(seed);
  std::vector<long long> loads_p1(m, 0);   // P1's own loads, live bins only
  std::vector<long long> loads_all(m, 0);  // shared by P1a and P2
  std::vector<char> alive(m, 1);
  std::vector<int> live = iota_vec(m);
  int rounds = m / 6;
  for (int t = 0; t < rounds; ++t) {
    // P1 deletes its 3 heaviest live bins; P1a marks the same bins, which
    // keeps all three runs on one probability space.
    for (int victim : pick_top(loads_p1, live, 3, rng)) {
      alive[victim] = 0;
      live.erase(std::find(live.begin(), live.end(), victim));
    }
    std::vector<char> marked(m, 0);
    std::vector<int> labels = sample_distinct(m, k - 3, marked, rng);
    for (int label : labels) {
      ++loads_all[label];
      if (alive[label]) {
        ++loads_p1[label];
      } else {
        // P1 rethrows a ball addressed to a dead bin at a uniform live bin.
        ++loads_p1[live[rng.below(live.size())]];
      }
    }
  }
  for (long long l : loads_all) res.total_balls += l;
  for (int i : live) {
    res.p1.push_back(loads_p1[i]);
    res.p1a.push_back(loads_all[i]);
  }
  std::sort(res.p1.begin(), res.p1.end(), std::greater<long long>());
  std::sort(res.p1a.begin(), res.p1a.end(), std::greater<long long>());
  std::vector<long long> all = loads_all;
  std::sort(all.begin(), all.end());
  res.p2.assign(all.begin(), all.begin() + m / 2);
  std::sort(res.p2.begin(), res.p2.end(), std::greater<long long>());
  return res;
}

}  // namespace cyclebasis
