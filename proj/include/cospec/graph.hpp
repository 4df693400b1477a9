#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace cospec {

using Vertex = int;

struct Edge {
  Vertex u;
  Vertex v;
  auto operator<=>(const Edge&) const = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored row-wise as bit sets of `row_words()` 64-bit words;
/// bit j of row i is set iff i and j are adjacent. Rows are symmetric and the
/// diagonal is always clear. Build instances with GraphBuilder or the free
/// builder functions.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  int row_words() const noexcept { return words_; }

  bool adjacent(Vertex u, Vertex v) const;
  int degree(Vertex v) const;
  std::span<const std::uint64_t> row(Vertex v) const;

  std::size_t edge_count() const;
  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;
  std::vector<Vertex> neighbors(Vertex v) const;

  /// Vertex v of this graph becomes vertex perm[v] of the result.
  Graph relabeled(std::span<const Vertex> perm) const;
  /// Induced subgraph; vertices[i] becomes vertex i of the result.
  Graph induced(std::span<const Vertex> vertices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  void check_vertex(Vertex v) const;

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  int order() const noexcept { return graph_.n_; }
  GraphBuilder& add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const { return graph_.adjacent(u, v); }
  Graph build() const& { return graph_; }
  Graph build() && { return std::move(graph_); }

 private:
  Graph graph_;
};

inline int words_for(int n) { return (n + 63) / 64; }

}  // namespace cospec
