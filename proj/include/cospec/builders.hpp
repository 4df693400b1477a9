#pragma once

#include <cstddef>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

enum class BasicKind { complete, star, path, cycle, empty };

/// Named small graphs. `size` is the vertex count except for star, where it is
/// the number of leaves (the centre is vertex 0).
Graph build_basic(BasicKind kind, int size);

inline Graph complete(int n) { return build_basic(BasicKind::complete, n); }
inline Graph star(int leaves) { return build_basic(BasicKind::star, leaves); }
inline Graph path(int n) { return build_basic(BasicKind::path, n); }
inline Graph cycle(int n) { return build_basic(BasicKind::cycle, n); }
inline Graph empty_graph(int n) { return build_basic(BasicKind::empty, n); }

/// Identifies vertex u of g with vertex v of h. Vertices of g keep their
/// labels; the remaining vertices of h follow in their original order.
Graph coalesce(const Graph& g, Vertex u, const Graph& h, Vertex v);

Graph disjoint_union(const Graph& g, const Graph& h);
Graph add_isolated(const Graph& g, int count);

/// K_p with q pendant edges at one clique vertex. Vertex 0 is the apex,
/// 1..p-1 the rest of the clique, p..p+q-1 the pendant vertices.
Graph pineapple(int p, int q);

/// K_n with the edges of an m-clique removed (vertices 0..m-1 are the
/// independent part), i.e. the complete multipartite graph K_{m,1,...,1}.
Graph complete_minus_clique(int n, int m);

/// One vertex per edge of g in the order of Graph::edges().
Graph line_graph(const Graph& g);

/// Line graph plus two nonadjacent vertices joined to every line-graph vertex
/// whose edge is incident with `root`. The two new vertices come last.
Graph generalized_line_graph_1(const Graph& g, Vertex root);

struct GraphCounts {
  std::size_t edges = 0;
  std::size_t triangles = 0;
  std::vector<int> degrees;          // by vertex
  std::vector<int> component_sizes;  // descending
  bool connected = false;
};

GraphCounts counts(const Graph& g);
std::size_t triangle_count(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

}  // namespace cospec
