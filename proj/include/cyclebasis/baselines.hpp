#pragma once

#include <cstdint>

#include "cyclebasis/engine.hpp"
#include "cyclebasis/gf2.hpp"
#include "cyclebasis/multigraph.hpp"

namespace cyclebasis {

enum class TreePolicy { bfs, dfs };

// Fundamental cycle basis of a spanning forest: one cycle per non-tree edge
// (tree path between its endpoints plus the edge), non-tree edges in
// ascending id order. The seed picks each component's root uniformly.
CycleBasis fundamental_basis(const MultiGraph& g, TreePolicy policy,
                             std::uint64_t seed);

// Minimum total-length cycle basis (unweighted): candidate short cycles from
// every vertex's shortest-path tree — paths made unique by ordering on
// (length, edge-id bitset as a big integer) — filtered to genuine simple
// cycles, deduplicated, sorted by (length, bitset value), then reduced
// greedily over GF(2). Deterministic: no randomness anywhere.
CycleBasis min_weight_cycle_basis(const MultiGraph& g);

// Total edge count over the basis, counting multiplicity.
long long basis_total_length(const CycleBasis& basis);

// Exact Cheeger constant h(g) = min over subsets S with 1 <= |S| <= n/2 of
// |boundary(S)| / |S| (self-loops never cross). Gray-code subset walk with
// incremental boundary updates; exact rational compare. Requires connected g
// and n <= 26; throws std::invalid_argument otherwise.
Rational cheeger_constant(const MultiGraph& g);

}  // namespace cyclebasis
