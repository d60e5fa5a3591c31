#include "cyclebasis/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cyclebasis {

int MultiGraph::check_vertex(int v) const {
  if (v < 0 || v >= static_cast<int>(vertex_alive_.size()))
    throw std::out_of_range("vertex id out of range: " + std::to_string(v));
  return v;
}

int MultiGraph::check_edge(int e) const {
  if (e < 0 || e >= static_cast<int>(edges_.size()))
    throw std::out_of_range("edge id out of range: " + std::to_string(e));
  return e;
}

int MultiGraph::add_vertex() {
  int id = static_cast<int>(vertex_alive_.size());
  vertex_alive_.push_back(1);
  degree_.push_back(0);
  adj_.emplace_back();
  ++live_vertex_count_;
  return id;
}

int MultiGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (!vertex_alive_[u] || !vertex_alive_[v])
    throw std::invalid_argument("add_edge: endpoint is not alive");
  int id = static_cast<int>(edges_.size());
  edges_.push_back({u, v, true});
  adj_[u].emplace_back(id, v);
  adj_[v].emplace_back(id, u);  // self-loop: two entries, degree += 2
  degree_[u] += (u == v) ? 2 : 1;
  if (u != v) degree_[v] += 1;
  ++live_edge_count_;
  return id;
}

void MultiGraph::drop_from_adj(int v, int e) {
  auto& lst = adj_[v];
  for (auto it = lst.begin(); it != lst.end();) {
    if (it->first == e)
      it = lst.erase(it);
    else
      ++it;
  }
}

void MultiGraph::remove_edge(int e) {
  EdgeRec& r = edges_[check_edge(e)];
  if (!r.alive) throw std::invalid_argument("remove_edge: edge already removed");
  r.alive = false;
  drop_from_adj(r.u, e);
  degree_[r.u] -= (r.u == r.v) ? 2 : 1;
  if (r.u != r.v) {
    drop_from_adj(r.v, e);
    degree_[r.v] -= 1;
  }
  --live_edge_count_;
}

void MultiGraph::remove_vertex(int v) {
  check_vertex(v);
  if (!vertex_alive_[v]) throw std::invalid_argument("remove_vertex: vertex already removed");
  if (degree_[v] != 0)
    throw std::invalid_argument("remove_vertex: vertex still has live edges");
  vertex_alive_[v] = 0;
  --live_vertex_count_;
}

std::vector<int> MultiGraph::live_vertices() const {
  std::vector<int> out;
  out.reserve(live_vertex_count_);
  for (int v = 0; v < vertex_limit(); ++v)
    if (vertex_alive_[v]) out.push_back(v);
  return out;
}

std::vector<int> MultiGraph::live_edges() const {
  std::vector<int> out;
  out.reserve(live_edge_count_);
  for (int e = 0; e < edge_limit(); ++e)
    if (edges_[e].alive) out.push_back(e);
  return out;
}

int MultiGraph::component_count() const {
  int comps = 0;
  std::vector<char> seen(vertex_limit(), 0);
  std::deque<int> queue;
  for (int s = 0; s < vertex_limit(); ++s) {
    if (!vertex_alive_[s] || seen[s]) continue;
    ++comps;
    seen[s] = 1;
    queue.push_back(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (auto [e, w] : adj_[v]) {
        (void)e;
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  return comps;
}

void MultiGraph::audit() const {
  auto fail = [](const std::string& what) { throw std::logic_error("MultiGraph::audit: " + what); };
  int live_v = 0, live_e = 0;
  for (int v = 0; v < vertex_limit(); ++v) {
    if (vertex_alive_[v]) ++live_v;
    int deg = 0;
    for (auto [e, w] : adj_[v]) {
      if (e < 0 || e >= edge_limit()) fail("adjacency references bad edge id");
      const EdgeRec& r = edges_[e];
      if (!r.alive) fail("adjacency references dead edge");
      if (!vertex_alive_[v]) fail("dead vertex has adjacency entries");
      if (r.u != v && r.v != v) fail("adjacency entry on non-endpoint");
      int other = (r.u == v) ? r.v : r.u;
      if (r.u == r.v) other = v;  // self-loop
      if (w != other) fail("adjacency 'other endpoint' mismatch");
      ++deg;
    }
    if (deg != degree_[v]) fail("degree cache mismatch");
  }
  for (int e = 0; e < edge_limit(); ++e) {
    const EdgeRec& r = edges_[e];
    if (!r.alive) continue;
    ++live_e;
    if (!vertex_alive_[r.u] || !vertex_alive_[r.v]) fail("live edge with dead endpoint");
    auto count_in = [&](int v) {
      int c = 0;
      for (auto [ee, w] : adj_[v]) {
        (void)w;
        if (ee == e) ++c;
      }
      return c;
    };
    if (r.u == r.v) {
      if (count_in(r.u) != 2) fail("self-loop must appear twice in adjacency");
    } else {
      if (count_in(r.u) != 1 || count_in(r.v) != 1) fail("edge must appear once per endpoint");
    }
  }
  if (live_v != live_vertex_count_) fail("live vertex count mismatch");
  if (live_e != live_edge_count_) fail("live edge count mismatch");
}

BfsResult bfs(const MultiGraph& g, int root) {
  if (!g.vertex_alive(root)) throw std::invalid_argument("bfs: root is not alive");
  BfsResult b;
  b.root = root;
  int lim = g.vertex_limit();
  b.parent.assign(lim, -1);
  b.parent_edge.assign(lim, -1);
  b.depth.assign(lim, -1);
  b.branch.assign(lim, -1);
  std::vector<char> edge_seen(g.edge_limit(), 0);
  std::deque<int> queue;
  b.depth[root] = 0;
  b.branch[root] = root;
  queue.push_back(root);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (auto [e, w] : g.incident(v)) {
      if (edge_seen[e]) continue;  // tree edge seen from the child side, or
      edge_seen[e] = 1;            // second adjacency entry of a self-loop
      if (b.depth[w] < 0) {
        b.depth[w] = b.depth[v] + 1;
        b.parent[w] = v;
        b.parent_edge[w] = e;
        b.branch[w] = (v == root) ? w : b.branch[v];
        queue.push_back(w);
      } else {
        b.cross_edges.push_back(e);
      }
    }
  }
  return b;
}

std::vector<int> cycle_from_cross_edge(const MultiGraph& g, const BfsResult& b,
                                       int e) {
  auto [x, y] = g.endpoints(e);
  if (!b.reached(x) || !b.reached(y))
    throw std::invalid_argument("cycle_from_cross_edge: edge not in BFS tree's component");
  std::vector<int> up_x, up_y;
  while (x != y) {
    if (b.depth[x] >= b.depth[y]) {
      up_x.push_back(b.parent_edge[x]);
      x = b.parent[x];
    } else {
      up_y.push_back(b.parent_edge[y]);
      y = b.parent[y];
    }
  }
  std::vector<int> cycle;
  cycle.reserve(1 + up_x.size() + up_y.size());
  cycle.push_back(e);
  cycle.insert(cycle.end(), up_y.begin(), up_y.end());
  for (auto it = up_x.rbegin(); it != up_x.rend(); ++it) cycle.push_back(*it);
  return cycle;
}

namespace {

bool strip_line(std::string& line) {
  auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  std::size_t a = 0, z = line.size();
  while (a < z && is_space(line[a])) ++a;
  while (z > a && is_space(line[z - 1])) --z;
  line = line.substr(a, z - a);
  return !line.empty();
}

[[noreturn]] void parse_fail(const std::string& name, int lineno, const std::string& what) {
  throw std::runtime_error(name + ":" + std::to_string(lineno) + ": " + what);
}

bool parse_two_ints(const std::string& s, long long& a, long long& b) {
  std::istringstream iss(s);
  std::string extra;
  if (!(iss >> a >> b)) return false;
  if (iss >> extra) return false;
  return true;
}

}  // namespace

MultiGraph read_edge_list(std::istream& in, const std::string& name) {
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!strip_line(line)) continue;
    if (!parse_two_ints(line, n, m) || n < 0 || m < 0)
      parse_fail(name, lineno, "expected header 'n m' with nonnegative integers, got '" + line + "'");
    break;
  }
  if (n < 0) throw std::runtime_error(name + ": empty input, expected 'n m' header");
  MultiGraph g(static_cast<int>(n));
  long long added = 0;
  while (added < m && std::getline(in, line)) {
    ++lineno;
    if (!strip_line(line)) continue;
    long long u, v;
    if (!parse_two_ints(line, u, v))
      parse_fail(name, lineno, "expected edge 'u v', got '" + line + "'");
    if (u < 0 || u >= n || v < 0 || v >= n)
      parse_fail(name, lineno, "endpoint out of range [0, " + std::to_string(n) + ")");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
    ++added;
  }
  if (added < m)
    throw std::runtime_error(name + ": header promised " + std::to_string(m) +
                             " edges, found " + std::to_string(added));
  while (std::getline(in, line)) {
    ++lineno;
    if (strip_line(line)) parse_fail(name, lineno, "trailing content after last edge");
  }
  return g;
}

MultiGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in, path);
}

void write_edge_list(const MultiGraph& g, std::ostream& out) {
  // Only meaningful for graphs whose live vertices are 0..n-1 (fresh graphs).
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (int e : g.live_edges()) {
    auto [u, v] = g.endpoints(e);
    out << u << ' ' << v << '\n';
  }
}

std::string to_edge_list(const MultiGraph& g) {
  std::ostringstream oss;
  write_edge_list(g, oss);
  return oss.str();
}

}  // namespace cyclebasis
