#pragma once

#include <cstdint>

#include "cyclebasis/multigraph.hpp"

namespace cyclebasis {

// Uniform-ish random simple d-regular graph on n vertices via incremental
// stub pairing: repeatedly join two random stubs whose union keeps the graph
// simple, restarting the attempt when only unsuitable pairs remain. Requires
// n*d even, d < n. Throws std::runtime_error after 10000 restarts.
MultiGraph random_regular(int n, int d, std::uint64_t seed);

// random_regular, resampled (fresh derived seed) until connected.
MultiGraph random_regular_connected(int n, int d, std::uint64_t seed);

// Erdos-Renyi G(n, p) with each of the n*(n-1)/2 possible edges included
// independently; edge ids in lexicographic (u, v) order. Used by test
// fixtures that need small arbitrary graphs.
MultiGraph random_gnp(int n, double p, std::uint64_t seed);

}  // namespace cyclebasis
