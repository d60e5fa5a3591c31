#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cyclebasis/multigraph.hpp"
#include "oracles.hpp"

using cyclebasis::BfsResult;
using cyclebasis::MultiGraph;
using cyclebasis::bfs;
using cyclebasis::cycle_from_cross_edge;
using cyclebasis::read_edge_list;
using cyclebasis::to_edge_list;

TEST_CASE("ids are stable and monotone") {
  MultiGraph g;
  CHECK(g.add_vertex() == 0);
  CHECK(g.add_vertex() == 1);
  CHECK(g.add_vertex() == 2);
  CHECK(g.add_edge(0, 1) == 0);
  CHECK(g.add_edge(1, 2) == 1);
  g.remove_edge(0);
  // dead ids keep answering endpoint queries and are never reused
  CHECK(g.endpoints(0).u == 0);
  CHECK_FALSE(g.edge_alive(0));
  CHECK(g.add_edge(0, 2) == 2);
  CHECK(g.edge_limit() == 3);
  CHECK(g.edge_count() == 2);
  g.audit();
}

TEST_CASE("degrees, self-loops, incident order") {
  MultiGraph g(3);
  int loop = g.add_edge(1, 1);
  int e01 = g.add_edge(0, 1);
  int e12 = g.add_edge(1, 2);
  CHECK(g.degree(1) == 4);  // loop counts twice
  CHECK(g.degree(0) == 1);
  const auto& inc = g.incident(1);
  REQUIRE(inc.size() == 4);  // the loop appears twice
  CHECK(inc[0] == std::pair<int, int>{loop, 1});
  CHECK(inc[1] == std::pair<int, int>{loop, 1});
  CHECK(inc[2] == std::pair<int, int>{e01, 0});
  CHECK(inc[3] == std::pair<int, int>{e12, 2});
  g.remove_edge(loop);
  CHECK(g.degree(1) == 2);
  CHECK(g.incident(1).size() == 2);
  g.audit();
}

TEST_CASE("vertex removal requires isolation") {
  MultiGraph g(2);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.remove_vertex(0), std::invalid_argument);
  g.remove_edge(0);
  g.remove_vertex(0);
  CHECK_FALSE(g.vertex_alive(0));
  CHECK(g.vertex_count() == 1);
  CHECK_THROWS_AS(g.remove_vertex(0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.degree(99), std::out_of_range);
  g.audit();
}

TEST_CASE("component counting") {
  MultiGraph g(5);
  CHECK(g.component_count() == 5);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  CHECK(g.component_count() == 3);
  CHECK_FALSE(g.connected());
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  CHECK(g.connected());
}

TEST_CASE("bfs tree shape on a path") {
  MultiGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  BfsResult b = bfs(g, 1);
  CHECK(b.depth[1] == 0);
  CHECK(b.depth[0] == 1);
  CHECK(b.depth[3] == 2);
  CHECK(b.parent[3] == 2);
  CHECK(b.parent_edge[3] == 2);
  CHECK(b.branch[1] == 1);
  CHECK(b.branch[0] == 0);
  CHECK(b.branch[2] == 2);
  CHECK(b.branch[3] == 2);  // inherits the first vertex after the root
  CHECK(b.cross_edges.empty());
}

TEST_CASE("bfs records parallel edges and self-loops as cross edges") {
  MultiGraph g(2);
  int a = g.add_edge(0, 1);
  int bb = g.add_edge(0, 1);
  int loop = g.add_edge(1, 1);
  BfsResult b = bfs(g, 0);
  CHECK(b.parent_edge[1] == a);
  REQUIRE(b.cross_edges.size() == 2);
  CHECK(b.cross_edges[0] == bb);   // found while scanning the root
  CHECK(b.cross_edges[1] == loop); // second adjacency entry is skipped
}

TEST_CASE("bfs cross-edge discovery order on a square") {
  // 0-1, 0-2, 1-3, 2-3: the unique cross edge surfaces while scanning 2.
  MultiGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 3);
  int cross = g.add_edge(2, 3);
  BfsResult b = bfs(g, 0);
  REQUIRE(b.cross_edges.size() == 1);
  CHECK(b.cross_edges[0] == cross);
  auto cyc = cycle_from_cross_edge(g, b, cross);
  std::sort(cyc.begin(), cyc.end());
  CHECK(cyc == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("fundamental cycle of a triangle cross edge") {
  auto g = oracles::complete_graph(4);
  BfsResult b = bfs(g, 0);
  REQUIRE(b.cross_edges.size() == 3);
  for (int e : b.cross_edges) {
    auto cyc = cycle_from_cross_edge(g, b, e);
    CHECK(cyc.size() == 3);  // both endpoints sit at depth 1
    CHECK(cyc.front() == e);
  }
}

TEST_CASE("fundamental cycle across a disconnected bfs throws") {
  MultiGraph g(4);
  g.add_edge(0, 1);
  int far = g.add_edge(2, 3);
  BfsResult b = bfs(g, 0);
  CHECK_THROWS_AS(cycle_from_cross_edge(g, b, far), std::invalid_argument);
}

TEST_CASE("edge list roundtrip") {
  auto g = oracles::petersen();
  std::string text = to_edge_list(g);
  std::istringstream in(text);
  MultiGraph h = read_edge_list(in);
  CHECK(h.vertex_count() == 10);
  CHECK(h.edge_count() == 15);
  CHECK(to_edge_list(h) == text);
}

TEST_CASE("edge list parsing accepts comments and blank lines") {
  std::istringstream in(
      "# triangle\n"
      "\n"
      "3 3   # header\n"
      "0 1\n"
      "  1 2  \n"
      "2 0 # wraps\n"
      "\n");
  MultiGraph g = read_edge_list(in);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
}

static std::string parse_error(const std::string& text) {
  std::istringstream in(text);
  try {
    read_edge_list(in, "t.edges");
  } catch (const std::runtime_error& e) {
    return e.what();
  }
  return "";
}

TEST_CASE("edge list parse errors carry line numbers") {
  CHECK(parse_error("nope\n").find("t.edges:1") == 0);
  CHECK(parse_error("2 1\n0 1 9\n").find("t.edges:2") == 0);
  CHECK(parse_error("2 1\n0 5\n").find("t.edges:2") == 0);
  CHECK(parse_error("# only comments\n") ==
        "t.edges: empty input, expected 'n m' header");
  CHECK(parse_error("3 2\n0 1\n") ==
        "t.edges: header promised 2 edges, found 1");
  CHECK(parse_error("2 1\n0 1\n1 0\n").find("t.edges:3") == 0);
  CHECK(parse_error("2 1\n0 1\n1 0\n").find("trailing") != std::string::npos);
}
