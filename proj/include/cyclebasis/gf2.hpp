#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclebasis/multigraph.hpp"

namespace cyclebasis {

// A cycle is a set of edge ids, kept sorted ascending.
using Cycle = std::vector<int>;

// Dense GF(2) vector over edge ids (64 ids per word).
class EdgeVector {
 public:
  explicit EdgeVector(int bits) : bits_(bits), w_((bits + 63) / 64, 0) {}

  int size() const { return bits_; }
  void set(int i) { w_[word(i)] |= mask(i); }
  void reset(int i) { w_[word(i)] &= ~mask(i); }
  void flip(int i) { w_[word(i)] ^= mask(i); }
  bool test(int i) const { return (w_[word(i)] & mask(i)) != 0; }

  EdgeVector& operator^=(const EdgeVector& o);
  bool any() const;
  int popcount() const;
  int lowest_set() const;  // -1 if empty

  bool operator==(const EdgeVector& o) const { return bits_ == o.bits_ && w_ == o.w_; }
  // Total order used for deterministic tie-breaking: big-integer value of the
  // bit string (edge id 0 = least significant bit).
  bool value_less(const EdgeVector& o) const;

  const std::vector<std::uint64_t>& words() const { return w_; }

  static EdgeVector from_edges(int bits, const std::vector<int>& ids);
  std::vector<int> to_edges() const;  // ascending

 private:
  int word(int i) const { return i >> 6; }
  std::uint64_t mask(int i) const { return 1ULL << (i & 63); }

  int bits_;
  std::vector<std::uint64_t> w_;
};

// Rank of the span of rows (rows are consumed).
int gf2_rank(std::vector<EdgeVector> rows);

struct BasisReport {
  bool is_cycles = false;     // every element is a nonempty connected even subgraph
  bool independent = false;   // rank == size over GF(2)
  int rank = 0;
  int expected_dim = 0;       // m - n + component_count
  bool is_basis = false;      // all of the above and rank == expected_dim
  std::string detail;         // first failure, for diagnostics
};

// Verifies candidate against the cycle space of g: every cycle must be a
// nonempty set of live edges inducing even degree everywhere with connected
// support, the family must be GF(2)-independent, and its size must equal
// m - n + c.
BasisReport verify_basis(const MultiGraph& g, const std::vector<Cycle>& basis);

// max over edges of the number of basis cycles containing that edge.
int max_edge_participation(const std::vector<Cycle>& basis);
// histogram[L] = number of edge ids of g with participation exactly L.
std::vector<long long> participation_histogram(const MultiGraph& g,
                                               const std::vector<Cycle>& basis);

// True iff some ordering of the cycles has each cycle containing an edge
// that appears in no earlier cycle (decided by greedy private-edge peeling;
// the property belongs to the set, so the input order is irrelevant).
bool verify_weakly_fundamental(const std::vector<Cycle>& basis);

// Length of a shortest cycle; throws std::invalid_argument if g is a forest.
// Self-loops have length 1, parallel pairs length 2.
int girth(const MultiGraph& g);

struct Rational {
  long long num = 0;
  long long den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// girth(g) * (m - n + 1) / m for connected g: a lower bound on the maximum
// edge participation of any cycle basis. Exact (not reduced).
Rational participation_lower_bound(const MultiGraph& g);

}  // namespace cyclebasis
