#include "cospec/graph.hpp"

#include <bit>
#include <string>

#include "cospec/error.hpp"

namespace cospec {

Graph::Graph(int n) {
  if (n < 0) throw InvalidArgument("graph order must be nonnegative, got " + std::to_string(n));
  n_ = n;
  words_ = words_for(n);
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph::Graph(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const Edge& e : edges) b.add_edge(e.u, e.v);
  *this = std::move(b).build();
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range for order " +
                          std::to_string(n_));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1U;
}

int Graph::degree(Vertex v) const {
  int d = 0;
  for (std::uint64_t w : row(v)) d += std::popcount(w);
  return d;
}

std::span<const std::uint64_t> Graph::row(Vertex v) const {
  check_vertex(v);
  return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (std::uint64_t w : bits_) total += std::popcount(w);
  return total / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.push_back({u, v});
  return out;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  auto r = row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw InvalidArgument("relabeling must have one entry per vertex");
  std::vector<bool> seen(n_, false);
  for (Vertex p : perm) {
    if (p < 0 || p >= n_ || seen[p]) throw InvalidArgument("relabeling is not a permutation");
    seen[p] = true;
  }
  GraphBuilder b(n_);
  for (const Edge& e : edges()) b.add_edge(perm[e.u], perm[e.v]);
  return std::move(b).build();
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  const int m = static_cast<int>(vertices.size());
  for (Vertex v : vertices) check_vertex(v);
  GraphBuilder b(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (vertices[i] == vertices[j])
        throw InvalidArgument("induced subgraph vertex list contains duplicates");
      else if (adjacent(vertices[i], vertices[j]))
        b.add_edge(i, j);
  return std::move(b).build();
}

GraphBuilder::GraphBuilder(int n) : graph_(n) {}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  graph_.check_vertex(u);
  graph_.check_vertex(v);
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  const int w = graph_.words_;
  graph_.bits_[static_cast<std::size_t>(u) * w + v / 64] |= std::uint64_t{1} << (v % 64);
  graph_.bits_[static_cast<std::size_t>(v) * w + u / 64] |= std::uint64_t{1} << (u % 64);
  return *this;
}

}  // namespace cospec
