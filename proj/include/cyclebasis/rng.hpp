#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace cyclebasis {

// splitmix64 finalizer; used to derive independent sub-seeds from one master
// seed so that trial i of experiment e always sees the same stream.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
  return mix64(a ^ mix64(b));
}

// Deterministic RNG wrapper. mt19937_64 output is fixed by the standard;
// all derived draws below avoid std::uniform_int_distribution / std::shuffle,
// whose results are implementation-defined, so streams are reproducible
// across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, n). Multiply-shift with rejection (unbiased).
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * n;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
      const std::uint64_t t = (0 - n) % n;
      while (lo < t) {
        m = static_cast<unsigned __int128>(next()) * n;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  int index(std::size_t n) { return static_cast<int>(below(n)); }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Fisher-Yates; draw order fixed so shuffles are reproducible.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

  template <typename T>
  const T& choice(const std::vector<T>& v) {
    if (v.empty()) throw std::invalid_argument("Rng::choice: empty vector");
    return v[below(v.size())];
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace cyclebasis
