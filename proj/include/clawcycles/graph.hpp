#ifndef CLAWCYCLES_GRAPH_HPP
#define CLAWCYCLES_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "clawcycles/error.hpp"

namespace clawcycles {

/// Unordered vertex pair, stored with first < second once normalized.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple path: pairwise distinct vertices, consecutive ones adjacent.
struct Path {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }

  friend bool operator==(const Path&, const Path&) = default;
};

/// Cycle as a cyclic vertex sequence; the closing edge back -> front is implicit.
struct Cycle {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.size(); }

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Simple undirected graph on vertices 0..n-1 with sorted neighbor lists.
/// Immutable once built; every algorithm in the library takes it by const
/// reference.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n) : adj_(n) {}

  /// Duplicate pairs collapse; loops and out-of-range endpoints throw.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].size(); }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < adj_.size(); }

  /// Edges in lexicographic order of (u, v), u < v.
  std::vector<Edge> edges() const;

  /// 0 for the empty graph.
  std::size_t min_degree() const;
  std::size_t max_degree() const;
  bool is_regular(std::size_t d) const;
  bool is_cubic() const { return order() > 0 && is_regular(3); }

  /// Graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  /// Induced subgraph on `keep` (in that order); vertex keep[i] becomes i.
  Graph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

bool is_path(const Graph& g, const Path& p);
bool is_cycle(const Graph& g, const Cycle& c);

/// First chord in lexicographic (u, v) order, if any.
std::optional<Edge> find_chord(const Graph& g, const Cycle& c);

/// A cycle of length at least 4 without chords.
bool is_hole(const Graph& g, const Cycle& c);

/// Component index per vertex (components numbered in order of their
/// smallest vertex) and the component count.
struct Components {
  std::vector<int> label;
  int count = 0;
};

/// `removed` vertices get label -1 and are skipped.
Components connected_components(const Graph& g, std::span<const Vertex> removed = {});

/// n = 0 and n = 1 count as connected.
bool is_connected(const Graph& g);

/// Articulation points in ascending order.
std::vector<Vertex> cut_vertices(const Graph& g);

/// BFS distances from `source`; -1 marks unreachable or forbidden vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source, std::span<const Vertex> forbidden = {});

/// Shortest u-v path avoiding `forbidden`; BFS explores neighbors in
/// ascending order and keeps the first parent found, so the result is
/// reproducible.
std::optional<Path> shortest_path(const Graph& g, Vertex u, Vertex v,
                                  std::span<const Vertex> forbidden = {});

/// Vertices of the line graph follow g.edges() order.
Graph line_graph(const Graph& g);

/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace clawcycles

#endif  // CLAWCYCLES_GRAPH_HPP
