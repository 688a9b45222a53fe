#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace seriate {

// Simple undirected graph: n vertices 0..n-1, a list of edges with u < v,
// no self-loops, no duplicates. Edge order is preserved as given (or as
// loaded), which keeps serialization round-trips exact.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  int m() const { return static_cast<int>(edges.size()); }
  bool operator==(const Graph&) const = default;
};

// Validating constructor: endpoints in range, no self-loops, no duplicate
// edges (in either orientation). Endpoints are normalized to u < v.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

std::vector<int> degrees(const Graph& g);

// Adjacency lists, each neighbor list sorted ascending.
std::vector<std::vector<int>> adjacency_lists(const Graph& g);

// Parse a whitespace-separated edge list: one "u v" pair per line, lines
// starting with '#' or '%' (and blank lines) ignored. Vertex ids are
// arbitrary non-negative integers, compacted to 0..n-1 by ascending numeric
// value over the kept (non-self-loop) lines, so the mapping does not depend
// on edge order. Duplicate edges and self-loops are dropped. Throws
// std::runtime_error naming the 1-based line number on malformed input, and
// if no edges remain.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);

// Write "u v" lines in stored edge order. Loading the output of
// write_edge_list yields a graph identical to the one written, provided
// every vertex has degree >= 1 (always true for loaded graphs).
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

bool is_connected(const Graph& g);

// Relabel vertices: new_id must be a permutation of 0..n-1; edge endpoints
// are mapped and re-normalized to u < v, edge order preserved.
Graph relabel(const Graph& g, const std::vector<int>& new_id);

// Induced subgraph on the kept vertices (ascending original ids in `keep`,
// which must be sorted and unique). Vertex j of the result corresponds to
// original vertex keep[j].
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

// Original ids of vertices with degree >= 1, ascending.
std::vector<int> vertices_with_degree(const Graph& g);

}  // namespace seriate
