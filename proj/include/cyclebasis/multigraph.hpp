#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace cyclebasis {

// Undirected multigraph (parallel edges and self-loops allowed) with stable
// ids: vertex and edge ids are issued monotonically and never reused, so an
// edge id identifies the same edge for the whole life of a computation.
// Adjacency lists keep insertion order; every "first encountered" rule in
// this package is defined in terms of that order.
class MultiGraph {
 public:
  struct Endpoints {
    int u;
    int v;
  };

  MultiGraph() = default;
  explicit MultiGraph(int n) {
    for (int i = 0; i < n; ++i) add_vertex();
  }

  int add_vertex();
  // Returns the new edge id. u == v adds a self-loop.
  int add_edge(int u, int v);
  void remove_edge(int e);
  // v must have no live incident edges.
  void remove_vertex(int v);

  int vertex_count() const { return live_vertex_count_; }
  int edge_count() const { return live_edge_count_; }
  // One past the largest id ever issued (ids of dead objects stay valid
  // indices into id-indexed arrays).
  int vertex_limit() const { return static_cast<int>(vertex_alive_.size()); }
  int edge_limit() const { return static_cast<int>(edges_.size()); }

  bool vertex_alive(int v) const { return vertex_alive_[check_vertex(v)] != 0; }
  bool edge_alive(int e) const { return edges_[check_edge(e)].alive; }
  Endpoints endpoints(int e) const {
    const EdgeRec& r = edges_[check_edge(e)];
    return {r.u, r.v};
  }

  // Self-loops contribute 2.
  int degree(int v) const { return degree_[check_vertex(v)]; }
  // (edge id, other endpoint) in insertion order; a self-loop appears twice.
  const std::vector<std::pair<int, int>>& incident(int v) const {
    return adj_[check_vertex(v)];
  }

  std::vector<int> live_vertices() const;  // ascending id
  std::vector<int> live_edges() const;     // ascending id

  int component_count() const;
  bool connected() const { return vertex_count() > 0 && component_count() == 1; }

  // Cross-checks adjacency, degrees, live counts and endpoint symmetry;
  // throws std::logic_error on the first inconsistency.
  void audit() const;

 private:
  struct EdgeRec {
    int u;
    int v;
    bool alive;
  };

  int check_vertex(int v) const;
  int check_edge(int e) const;
  void drop_from_adj(int v, int e);

  std::vector<EdgeRec> edges_;
  std::vector<char> vertex_alive_;
  std::vector<int> degree_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
  int live_vertex_count_ = 0;
  int live_edge_count_ = 0;
};

// Breadth-first search data for one root. Arrays are indexed by vertex id
// (size vertex_limit). Vertices are expanded in queue order and each
// vertex's incident list is scanned in insertion order; cross_edges records
// every non-tree edge in the order its second endpoint check happened, which
// defines the "first encountered" cross edge.
struct BfsResult {
  int root = -1;
  std::vector<int> parent;       // parent vertex, -1 for root/unreached
  std::vector<int> parent_edge;  // tree edge to parent, -1 for root/unreached
  std::vector<int> depth;        // -1 for unreached
  // Root-child branch label: branch[root] = root; branch[v] = first vertex
  // after the root on the tree path to v. Lets "does the fundamental cycle
  // pass through the root" be answered in O(1).
  std::vector<int> branch;
  std::vector<int> cross_edges;  // discovery order

  bool reached(int v) const { return depth[v] >= 0; }
};

BfsResult bfs(const MultiGraph& g, int root);

// Fundamental cycle of non-tree edge e with respect to b's tree: walks both
// endpoints up to their lowest common ancestor. Returns edge ids, cycle order
// (e first, then the y-side path upward, then the x-side path downward).
std::vector<int> cycle_from_cross_edge(const MultiGraph& g, const BfsResult& b,
                                       int e);

// Edge-list text format: first non-comment line "n m", then m lines "u v"
// with 0-based endpoints; '#' starts a comment, blank lines are ignored;
// parallel edges are repeated lines. Edge ids are assigned in line order.
// Throws std::runtime_error with a line number on malformed input.
MultiGraph read_edge_list(std::istream& in, const std::string& name = "<input>");
MultiGraph read_edge_list_file(const std::string& path);
void write_edge_list(const MultiGraph& g, std::ostream& out);
std::string to_edge_list(const MultiGraph& g);

}  // namespace cyclebasis
