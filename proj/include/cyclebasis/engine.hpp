#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cyclebasis/gf2.hpp"
#include "cyclebasis/multigraph.hpp"
#include "cyclebasis/rng.hpp"

namespace cyclebasis {

enum class RootSelect {
  random_vertex,    // uniform over live vertices
  max_load_vertex,  // maximize mean incident edge load, ties uniform
};

enum class CrossEdgeMode {
  first_encountered,   // first cross edge in BFS discovery order
  first_through_root,  // first whose fundamental cycle passes through the
                       // root; falls back to first_encountered if none does
};

enum class RemovalStrategy {
  uniform_random,        // uniform over the cycle's working edges
  max_load,              // highest load, ties uniform
  max_load_prefer_root,  // highest load among root-incident cycle edges if
                         // any, else highest load overall; ties uniform
  softmax,               // edge i with probability 2^{L(i)} / sum_j 2^{L(j)}
};

struct VariantConfig {
  RootSelect root = RootSelect::random_vertex;
  CrossEdgeMode cross = CrossEdgeMode::first_encountered;
  RemovalStrategy removal = RemovalStrategy::uniform_random;
  // When set, every iteration re-audits the working graph, the disjointness
  // of live expansion paths, and the bound participation(e) <= load of the
  // live working edge carrying e. Slow; meant for tests.
  bool audit = false;
};

// The five shipped policy bundles (0..4).
VariantConfig variant_config(int variant);
const char* variant_name(int variant);  // "v0".."v4"
int parse_variant(const std::string& name);

struct RunStats {
  long long case1 = 0;   // degree-1 vertex removals
  long long case2a = 0;  // degree-2 contractions
  long long case2b = 0;  // triangle / degenerate-cycle emissions
  long long case3 = 0;   // BFS short-cycle emissions
  int mu = 0;            // max edge participation of the emitted basis
  // (working cycle length, live vertex count) per Case 3 emission
  std::vector<std::pair<int, int>> case3_cycles;
  int max_case3_len = 0;
  std::vector<long long> load_histogram;  // [L] = #edges with participation L

  long long iterations() const { return case1 + case2a + case2b + case3; }
};

// Cycles are sorted ascending edge-id sets over the input graph, in emission
// order. meta[i] tags cycle i's origin.
struct CycleMeta {
  long long iteration = 0;
  int working_len = 0;     // length of the working-graph cycle when emitted
  char origin = '?';       // '2' = Case 2B, '3' = Case 3, 'T' = tree, 'M' = minimum
};

struct CycleBasis {
  std::vector<Cycle> cycles;
  std::vector<CycleMeta> meta;
};

// Reduces a copy of g case by case (isolated-vertex cleanup between
// iterations is housekeeping, not an iteration): degree-1 vertices are
// pruned, degree-2 vertices contracted (the merged edge's load is the max of
// the two it replaces) or, if the two neighbors are already adjacent, the
// triangle through the lowest-id such edge is emitted and that edge's load
// grows by 1; otherwise a cycle through cfg-selected root is found from the
// first cross edge of a BFS, emitted, all its working edges' loads grow by
// 1, and one cycle edge chosen by cfg.removal is removed. Input self-loops
// are emitted eagerly as 1-cycles (tallied under case2b). Every emitted
// cycle is the expansion of its working edges into original edge ids.
std::pair<CycleBasis, RunStats> build_cycle_basis(const MultiGraph& g,
                                                  const VariantConfig& cfg,
                                                  std::uint64_t seed);

// Selection primitives used by the engine, exposed for direct testing.
// Vertex load = mean load of incident edges (self-loops count twice); ties
// are compared exactly by cross-multiplication.
int select_root(const MultiGraph& g, const std::vector<long long>& edge_load,
                RootSelect mode, Rng& rng);
int select_cross_edge(const MultiGraph& g, const BfsResult& b, CrossEdgeMode mode);
int select_removal_edge(const MultiGraph& g, const std::vector<int>& cycle,
                        const std::vector<long long>& edge_load,
                        RemovalStrategy strategy, int root, Rng& rng);

}  // namespace cyclebasis
