#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cvt/permutation.hpp"

namespace cvt {

/// Finite simple undirected graph with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  /// Throws std::invalid_argument on loops, repeated edges or bad indices.
  static Graph from_edges(std::size_t n, std::span<const std::pair<int, int>> edges);
  /// Adjacency lists are sorted; throws if not simple or not symmetric.
  static Graph from_adjacency(std::vector<std::vector<int>> adjacency);

  std::size_t order() const { return adj_.size(); }
  std::size_t edge_count() const;
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::size_t degree(int v) const { return neighbors(v).size(); }
  bool adjacent(int u, int v) const;
  /// Position of `v` in the sorted adjacency list of `u`, or -1.
  int neighbor_index(int u, int v) const;
  bool is_regular(std::size_t valency) const;
  bool is_connected() const;
  /// Edges {u, v} with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  /// The image graph: vertex v becomes p(v).
  Graph relabel(const Permutation& p) const;
  bool is_automorphism(const Permutation& p) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<int>> adj_;
};

/// BFS distances from `root`; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int root);

/// Length of a shortest cycle; std::nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Largest distance between two vertices. Throws std::invalid_argument
/// ("disconnected") when the graph is not connected.
int diameter(const Graph& g);

/// A Hamilton cycle as a vertex sequence starting at 0, if one exists.
/// Depth-first search that extends a path from vertex 0, preferring
/// neighbours with few remaining options and pruning when an unvisited
/// vertex is left with fewer than two usable edges or the unvisited part
/// disconnects.
std::optional<std::vector<int>> find_hamilton_cycle(const Graph& g);
bool has_hamilton_cycle(const Graph& g);

enum class LadderKind { Circular, Moebius };

/// Circular ladder Cay(Zn x Z2, {(0,1), (1,0), (-1,0)}) (n >= 3), vertex
/// (i, j) numbered 2i + j; Moebius ladder Cay(Z2n, {1, -1, n}) (n >= 2).
Graph ladder(int n, LadderKind kind);

/// Replaces each vertex of a connected cubic graph by a triangle on its
/// three incident arcs. Arc (u, k-th neighbour) becomes vertex 3u + k.
Graph truncation(const Graph& g);

std::string graph6_encode(const Graph& g);
/// Throws std::invalid_argument on malformed or truncated input.
Graph graph6_decode(std::string_view text);

/// One graph6 string per line; blank lines are skipped.
std::vector<Graph> read_graph6_lines(std::string_view text);
std::vector<Graph> read_graph6_file(const std::string& path);
void write_graph6_file(const std::string& path, std::span<const Graph> graphs);

namespace named {
Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph complete_bipartite(int a, int b);
Graph complete_multipartite(int parts, int size);
Graph petersen();
/// Coxeter graph (28 vertices, cubic, girth 7).
Graph coxeter();
Graph cube(int dimension);
/// Circulant graph on Z_n with connection set +-jumps.
Graph circulant(int n, std::span<const int> jumps);
}  // namespace named

}  // namespace cvt
