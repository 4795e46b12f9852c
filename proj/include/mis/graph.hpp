#pragma once

#include <array>
#include <cassert>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mis/vertex_set.hpp"

namespace mis {

/// Invalid graph construction or out-of-range vertex.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple graph on vertices {0, ..., n-1}, n <= 64.
///
/// Each vertex owns one adjacency row. Rows are symmetric, loop-free and
/// confined to {0, ..., n-1}; every constructor establishes this and every
/// operation returns a new graph.
class Graph {
 public:
  /// Graph on zero vertices.
  Graph() = default;

  /// Edgeless graph on n vertices.
  static Graph empty(int n);
  static Graph complete(int n);

  /// Throws GraphError on endpoints outside [0, n) or loops. Duplicate and
  /// reversed pairs collapse to one edge.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Builds from adjacency rows, validating symmetry, loops and range.
  static Graph from_rows(std::span<const VertexSet> rows);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }
  int degree(Vertex v) const { return neighbors(v).size(); }
  /// Throws GraphError when the graph has no vertices.
  int min_degree() const;
  int edge_count() const;

  /// Edges (u, v) with u < v in ascending lexicographic order.
  std::vector<Edge> edges() const;

  std::span<const VertexSet> rows() const { return {rows_.data(), static_cast<std::size_t>(n_)}; }

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int n_ = 0;
  std::array<VertexSet, kMaxOrder> rows_{};

  friend class GraphBuilder;
};

/// Checks symmetry, loops and range of every row.
bool is_well_formed(const Graph& g);

/// Mutable accumulator for trusted internal construction; skips validation
/// beyond range checks and keeps rows symmetric.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  void add_edge(Vertex u, Vertex v) {
    g_.rows_[u].insert(v);
    g_.rows_[v].insert(u);
  }
  /// Replaces a whole row; the caller keeps rows symmetric.
  void set_row(Vertex v, VertexSet row) { g_.rows_[v] = row; }
  Graph build() const {
    assert(is_well_formed(g_));
    return g_;
  }

 private:
  Graph g_;
};

Graph complement(const Graph& g);

/// G[S] with members of S relabeled 0..|S|-1 in ascending order.
Graph induced_subgraph(const Graph& g, VertexSet s);

/// G - v, i.e. G[V \ {v}].
Graph delete_vertex(const Graph& g, Vertex v);

/// G1 + G2; vertices of G2 follow those of G1. Throws GraphError when the
/// combined order exceeds 64.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Relabels vertex v as perm[v]; perm must be a permutation of 0..n-1.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// "n=4 edges=[(0,1),(1,2),(2,3)]"
std::string describe(const Graph& g);

}  // namespace mis
