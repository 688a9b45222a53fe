#include "seriate/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace seriate {

namespace {

std::uint64_t edge_key(int u, int v) {
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw std::invalid_argument("graph: vertex count must be non-negative");
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: self-loops are not allowed");
    if (u > v) std::swap(u, v);
    if (!seen.insert(edge_key(u, v)).second)
      throw std::invalid_argument("graph: duplicate edge");
  }
  return Graph{n, std::move(edges)};
}

std::vector<int> degrees(const Graph& g) {
  std::vector<int> d(g.n, 0);
  for (auto [u, v] : g.edges) {
    ++d[u];
    ++d[v];
  }
  return d;
}

std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
  std::vector<std::vector<int>> adj(g.n);
  for (auto [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

Graph load_edge_list(std::istream& in) {
  std::vector<std::pair<long long, long long>> raw_edges;
  std::vector<long long> ids;
  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#' || line[start] == '%') continue;
    std::istringstream ls(line);
    long long a = 0, b = 0;
    std::string extra;
    if (!(ls >> a >> b) || (ls >> extra) || a < 0 || b < 0)
      throw std::runtime_error("edge list: malformed line " + std::to_string(line_no) +
                               ": expected two non-negative integers");
    if (a == b) continue;  // self-loop: dropped, and its id is not registered
    raw_edges.emplace_back(a, b);
    ids.push_back(a);
    ids.push_back(b);
  }
  if (raw_edges.empty()) throw std::runtime_error("edge list: no edges found");
  // Compact ids by ascending numeric value. This keeps the mapping independent
  // of edge order, and reloading a written graph (ids already 0..n-1, all of
  // degree >= 1) reproduces it exactly.
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::unordered_map<long long, int> id_of;
  id_of.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i)
    id_of.emplace(ids[i], static_cast<int>(i));
  std::vector<std::pair<int, int>> edges;
  edges.reserve(raw_edges.size());
  std::unordered_set<std::uint64_t> seen;
  for (auto [a, b] : raw_edges) {
    const int u = id_of[a];
    const int v = id_of[b];
    const int lo = std::min(u, v), hi = std::max(u, v);
    if (seen.insert(edge_key(lo, hi)).second) edges.emplace_back(lo, hi);
  }
  return Graph{static_cast<int>(ids.size()), std::move(edges)};
}

Graph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list file: " + path);
  return load_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  write_edge_list(g, out);
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return false;
  if (g.n == 1) return true;
  auto adj = adjacency_lists(g);
  std::vector<char> visited(g.n, 0);
  std::vector<int> stack{0};
  visited[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[u]) {
      if (!visited[w]) {
        visited[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.n;
}

Graph relabel(const Graph& g, const std::vector<int>& new_id) {
  if (static_cast<int>(new_id.size()) != g.n)
    throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<char> hit(g.n, 0);
  for (int x : new_id) {
    if (x < 0 || x >= g.n || hit[x])
      throw std::invalid_argument("relabel: not a permutation of 0..n-1");
    hit[x] = 1;
  }
  Graph out;
  out.n = g.n;
  out.edges.reserve(g.edges.size());
  for (auto [u, v] : g.edges) {
    int a = new_id[u], b = new_id[v];
    if (a > b) std::swap(a, b);
    out.edges.emplace_back(a, b);
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  std::vector<int> compact(g.n, -1);
  for (std::size_t j = 0; j < keep.size(); ++j) {
    int v = keep[j];
    if (v < 0 || v >= g.n || compact[v] != -1)
      throw std::invalid_argument("induced_subgraph: keep list must be sorted unique ids");
    if (j > 0 && keep[j] <= keep[j - 1])
      throw std::invalid_argument("induced_subgraph: keep list must be ascending");
    compact[v] = static_cast<int>(j);
  }
  Graph out;
  out.n = static_cast<int>(keep.size());
  for (auto [u, v] : g.edges) {
    int a = compact[u], b = compact[v];
    if (a >= 0 && b >= 0) out.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return out;
}

std::vector<int> vertices_with_degree(const Graph& g) {
  auto d = degrees(g);
  std::vector<int> keep;
  keep.reserve(g.n);
  for (int v = 0; v < g.n; ++v)
    if (d[v] > 0) keep.push_back(v);
  return keep;
}

}  // namespace seriate
