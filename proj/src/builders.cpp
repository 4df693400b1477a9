#include "cospec/builders.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

#include "cospec/error.hpp"

namespace cospec {

Graph build_basic(BasicKind kind, int size) {
  if (size < 0) throw InvalidArgument("graph size must be nonnegative, got " + std::to_string(size));
  switch (kind) {
    case BasicKind::complete: {
      GraphBuilder b(size);
      for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) b.add_edge(i, j);
      return std::move(b).build();
    }
    case BasicKind::star: {
      GraphBuilder b(size + 1);
      for (int i = 1; i <= size; ++i) b.add_edge(0, i);
      return std::move(b).build();
    }
    case BasicKind::path: {
      GraphBuilder b(size);
      for (int i = 0; i + 1 < size; ++i) b.add_edge(i, i + 1);
      return std::move(b).build();
    }
    case BasicKind::cycle: {
      if (size < 3) throw InvalidArgument("a cycle needs at least 3 vertices");
      GraphBuilder b(size);
      for (int i = 0; i < size; ++i) b.add_edge(i, (i + 1) % size);
      return std::move(b).build();
    }
    case BasicKind::empty:
      return Graph(size);
  }
  throw InvalidArgument("unknown graph kind");
}

Graph coalesce(const Graph& g, Vertex u, const Graph& h, Vertex v) {
  if (u < 0 || u >= g.order()) throw InvalidArgument("coalesce: vertex u out of range");
  if (v < 0 || v >= h.order()) throw InvalidArgument("coalesce: vertex v out of range");
  const int n = g.order() + h.order() - 1;
  auto map_h = [&](Vertex x) { return x == v ? u : (x < v ? g.order() + x : g.order() + x - 1); };
  GraphBuilder b(n);
  for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
  for (const Edge& e : h.edges()) b.add_edge(map_h(e.u), map_h(e.v));
  return std::move(b).build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  GraphBuilder b(g.order() + h.order());
  for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
  for (const Edge& e : h.edges()) b.add_edge(g.order() + e.u, g.order() + e.v);
  return std::move(b).build();
}

Graph add_isolated(const Graph& g, int count) {
  if (count < 0) throw InvalidArgument("cannot add a negative number of isolated vertices");
  return disjoint_union(g, Graph(count));
}

Graph pineapple(int p, int q) {
  if (p < 3 || q < 1)
    throw InvalidArgument("pineapple K_p^q needs p >= 3 and q >= 1, got p=" + std::to_string(p) +
                          " q=" + std::to_string(q));
  return coalesce(complete(p), 0, star(q), 0);
}

Graph complete_minus_clique(int n, int m) {
  if (m < 1 || m >= n)
    throw InvalidArgument("K_n minus K_m needs 1 <= m < n, got n=" + std::to_string(n) +
                          " m=" + std::to_string(m));
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = std::max(i + 1, m); j < n; ++j) b.add_edge(i, j);
  return std::move(b).build();
}

namespace {

Graph line_graph_with_extra(const Graph& g, int extra, const std::function<void(GraphBuilder&, const std::vector<Edge>&)>& finish) {
  const std::vector<Edge> es = g.edges();
  const int m = static_cast<int>(es.size());
  GraphBuilder b(m + extra);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (es[i].u == es[j].u || es[i].u == es[j].v || es[i].v == es[j].u || es[i].v == es[j].v)
        b.add_edge(i, j);
  finish(b, es);
  return std::move(b).build();
}

}  // namespace

Graph line_graph(const Graph& g) {
  return line_graph_with_extra(g, 0, [](GraphBuilder&, const std::vector<Edge>&) {});
}

Graph generalized_line_graph_1(const Graph& g, Vertex root) {
  if (root < 0 || root >= g.order()) throw InvalidArgument("generalized line graph: root out of range");
  return line_graph_with_extra(g, 2, [root](GraphBuilder& b, const std::vector<Edge>& es) {
    const int m = static_cast<int>(es.size());
    for (int i = 0; i < m; ++i)
      if (es[i].u == root || es[i].v == root) {
        b.add_edge(i, m);
        b.add_edge(i, m + 1);
      }
  });
}

std::size_t triangle_count(const Graph& g) {
  std::size_t t = 0;
  const int w = g.row_words();
  for (const Edge& e : g.edges()) {
    auto ru = g.row(e.u);
    auto rv = g.row(e.v);
    // count common neighbours x > e.v
    for (int k = 0; k < w; ++k) {
      std::uint64_t common = ru[k] & rv[k];
      const int lo = e.v + 1 - k * 64;
      if (lo >= 64) continue;
      if (lo > 0) common &= ~std::uint64_t{0} << lo;
      t += std::popcount(common);
    }
  }
  return t;
}

namespace {

std::vector<int> component_sizes(const Graph& g) {
  const int n = g.order();
  std::vector<int> comp(n, -1), sizes;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(sizes.size());
    sizes.push_back(0);
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      ++sizes[id];
      for (Vertex y : g.neighbors(x))
        if (comp[y] < 0) {
          comp[y] = id;
          stack.push_back(y);
        }
    }
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

}  // namespace

bool is_connected(const Graph& g) { return component_sizes(g).size() == 1; }

bool is_tree(const Graph& g) {
  return is_connected(g) && g.edge_count() + 1 == static_cast<std::size_t>(g.order());
}

GraphCounts counts(const Graph& g) {
  GraphCounts c;
  c.edges = g.edge_count();
  c.triangles = triangle_count(g);
  c.degrees.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) c.degrees.push_back(g.degree(v));
  c.component_sizes = component_sizes(g);
  c.connected = c.component_sizes.size() == 1;
  return c;
}

}  // namespace cospec
