#include <doctest.h>

#include "cospec/builders.hpp"
#include "cospec/canonical.hpp"
#include "cospec/constructions.hpp"
#include "cospec/error.hpp"
#include "cospec/lemma4.hpp"
#include "cospec/spectra.hpp"
#include "oracles.hpp"

using namespace cospec;

TEST_CASE("basic builders") {
  const auto k4 = counts(complete(4));
  CHECK(k4.edges == 6);
  CHECK(k4.triangles == 4);

  const Graph s = star(4);
  CHECK(s.order() == 5);
  CHECK(s.edge_count() == 4);
  CHECK(triangle_count(s) == 0);
  CHECK(s.degree(0) == 4);

  CHECK(empty_graph(3).order() == 3);
  CHECK(empty_graph(3).edge_count() == 0);
  CHECK(path(5).edge_count() == 4);
  CHECK(cycle(5).edge_count() == 5);
  CHECK(complete(0).order() == 0);

  CHECK_THROWS_AS(build_basic(BasicKind::complete, -1), InvalidArgument);
  CHECK_THROWS_AS(star(-2), InvalidArgument);
  CHECK_THROWS_AS(cycle(2), InvalidArgument);
}

TEST_CASE("graph value semantics") {
  GraphBuilder b(3);
  b.add_edge(0, 2);
  CHECK(b.has_edge(2, 0));
  CHECK_THROWS_AS(b.add_edge(1, 1), InvalidArgument);
  CHECK_THROWS_AS(b.add_edge(0, 3), InvalidArgument);
  const Graph g = b.build();
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(2, 0));
  CHECK_FALSE(g.adjacent(1, 1));
  CHECK(g.edges() == std::vector<Edge>{{0, 2}});
  CHECK(g.neighbors(0) == std::vector<Vertex>{2});

  const std::vector<Vertex> perm{2, 0, 1};
  const Graph r = g.relabeled(perm);
  CHECK(r.adjacent(2, 1));
  CHECK(r.edge_count() == 1);

  const std::vector<Vertex> sub{2, 0};
  CHECK(g.induced(sub).adjacent(0, 1));

  const Graph big = complete(70);
  CHECK(big.row_words() == 2);
  CHECK(big.degree(69) == 69);
  CHECK(big.edge_count() == 70 * 69 / 2);
}

TEST_CASE("coalesce") {
  CHECK(isomorphic(coalesce(complete(2), 0, complete(2), 0), path(3)));
  const Graph g = cycle(5);
  CHECK(isomorphic(coalesce(g, 3, empty_graph(1), 0), g));
  for (int p = 3; p <= 6; ++p)
    for (int q = 1; q <= 4; ++q)
      for (Vertex at = 0; at < p; ++at) CHECK(isomorphic(coalesce(complete(p), at, star(q), 0), pineapple(p, q)));
  CHECK_THROWS_AS(coalesce(g, 5, g, 0), InvalidArgument);
  CHECK_THROWS_AS(coalesce(g, 0, g, -1), InvalidArgument);
}

TEST_CASE("coalesce is commutative up to isomorphism") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + trial % 5);
    const Graph h = oracle::random_graph(rng, 1 + trial % 4);
    const Vertex u = static_cast<Vertex>(rng() % g.order());
    const Vertex v = static_cast<Vertex>(rng() % h.order());
    const Graph a = coalesce(g, u, h, v);
    CHECK(a.order() == g.order() + h.order() - 1);
    CHECK(a.edge_count() == g.edge_count() + h.edge_count());
    CHECK(isomorphic(a, coalesce(h, v, g, u)));
  }
}

TEST_CASE("disjoint union and isolated vertices") {
  const Graph two = disjoint_union(complete(2), complete(2));
  CHECK(two.order() == 4);
  CHECK(two.edge_count() == 2);
  CHECK(counts(two).component_sizes == std::vector<int>{2, 2});
  const Graph g = cycle(4);
  CHECK(add_isolated(g, 0) == g);
  CHECK(add_isolated(g, 3) == disjoint_union(g, empty_graph(3)));
  CHECK_THROWS_AS(add_isolated(g, -1), InvalidArgument);
}

TEST_CASE("pineapple layout and counts") {
  const Graph g = pineapple(4, 4);
  CHECK(g.order() == 8);
  CHECK(g.edge_count() == 10);
  CHECK(triangle_count(g) == 4);
  CHECK(g.degree(0) == 7);
  for (Vertex v = 1; v < 4; ++v) CHECK(g.degree(v) == 3);
  for (Vertex v = 4; v < 8; ++v) {
    CHECK(g.degree(v) == 1);
    CHECK(g.adjacent(0, v));
  }
  const Graph paw = pineapple(3, 1);
  CHECK(paw.order() == 4);
  CHECK(paw.edge_count() == 4);
  CHECK(triangle_count(paw) == 1);
  CHECK_THROWS_AS(pineapple(2, 1), InvalidArgument);
  CHECK_THROWS_AS(pineapple(3, 0), InvalidArgument);

  for (int p = 3; p <= 12; ++p)
    for (int q = 1; q <= 12; ++q) {
      const auto c = counts(pineapple(p, q));
      CHECK(c.edges == static_cast<std::size_t>(p * (p - 1) / 2 + q));
      CHECK(c.triangles == static_cast<std::size_t>(p * (p - 1) * (p - 2) / 6));
      CHECK(c.connected);
    }
}

TEST_CASE("complete minus clique") {
  const Graph g = complete_minus_clique(6, 4);
  CHECK(g.edge_count() == 9);
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v) CHECK_FALSE(g.adjacent(u, v));
  CHECK(counts(g).triangles == 4);
  CHECK(isomorphic(complete_minus_clique(7, 1), complete(7)));
  CHECK_THROWS_AS(complete_minus_clique(6, 6), InvalidArgument);
  CHECK_THROWS_AS(complete_minus_clique(6, 0), InvalidArgument);
}

TEST_CASE("line graphs") {
  CHECK(isomorphic(line_graph(star(3)), complete(3)));
  CHECK(isomorphic(line_graph(path(4)), path(3)));
  CHECK(isomorphic(line_graph(cycle(5)), cycle(5)));
  CHECK(line_graph(empty_graph(4)).order() == 0);
}

TEST_CASE("generalized line graphs") {
  for (int p = 2; p <= 7; ++p) {
    if (p >= 3) CHECK(isomorphic(generalized_line_graph_1(star(p), 1), pineapple(p, 2)));
    const Graph centre = generalized_line_graph_1(star(p), 0);
    GraphBuilder b(p + 2);
    for (Vertex u = 0; u < p + 2; ++u)
      for (Vertex v = u + 1; v < p + 2; ++v)
        if (!(u == p && v == p + 1)) b.add_edge(u, v);
    CHECK(isomorphic(centre, std::move(b).build()));
  }
  const Graph g = generalized_line_graph_1(complete(2), 0);
  CHECK(isomorphic(g, path(3)));
  CHECK_THROWS_AS(generalized_line_graph_1(path(3), 3), InvalidArgument);
}

TEST_CASE("line graph constructions agree with the edge-intersection oracle on all small trees") {
  int checked = 0;
  for (int t = 1; t <= 7; ++t)
    for (const Graph& tree : trees(t)) {
      CHECK(line_graph(tree) == oracle::edge_intersection_graph(tree));
      for (Vertex root = 0; root < tree.order(); ++root) {
        CHECK(generalized_line_graph_1(tree, root) == oracle::edge_intersection_glg(tree, root));
        ++checked;
      }
    }
  CHECK(checked > 0);
}

TEST_CASE("trees") {
  const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47};
  for (int t = 1; t <= 9; ++t) {
    const auto ts = trees(t);
    CHECK(ts.size() == expected[t - 1]);
    for (const Graph& g : ts) CHECK(is_tree(g));
  }
  CHECK_FALSE(is_tree(cycle(4)));
  CHECK_FALSE(is_tree(empty_graph(2)));
}

TEST_CASE("counts") {
  const auto c = counts(pineapple(5, 3));
  CHECK(c.edges == 13);
  CHECK(c.triangles == 10);
  CHECK(c.degrees.front() == 7);

  const auto e = counts(empty_graph(4));
  CHECK(e.edges == 0);
  CHECK(e.component_sizes == std::vector<int>{1, 1, 1, 1});
  CHECK_FALSE(e.connected);
  CHECK_FALSE(is_connected(Graph(0)));
  CHECK(is_connected(Graph(1)));

  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const Graph g = oracle::random_graph(rng, 1 + i % 10);
    CHECK(mpz_class(static_cast<unsigned long>(counts(g).triangles) * 6) == trace_power(g, 3));
  }
}

TEST_CASE("canonical form examples") {
  CHECK_FALSE(isomorphic(pineapple(4, 4), add_isolated(prop2_graph(2), 2)));
  CHECK_FALSE(isomorphic(complete(3), path(3)));
  CHECK(isomorphic(Graph(0), Graph(0)));

  const Graph g = pineapple(4, 3);
  const CanonicalForm f = canonical_form(g);
  CHECK(adjacency_code(g.relabeled(f.perm)) == f.code);
  CHECK(graph_from_code(f.code) == canonical_graph(g));
}

TEST_CASE("canonical code is invariant under relabelling") {
  std::mt19937_64 rng(2024);
  std::vector<Graph> samples{pineapple(4, 4), pineapple(6, 3), cycle(9), complete_minus_clique(8, 3),
                             disjoint_union(cycle(5), path(5)), line_graph(complete(5))};
  for (int i = 0; i < 10; ++i) samples.push_back(oracle::random_graph(rng, 5 + i, 0.3 + 0.04 * i));
  for (const Graph& g : samples) {
    const AdjacencyCode code = canonical_form(g).code;
    for (int r = 0; r < 50; ++r) {
      const Graph h = g.relabeled(oracle::random_permutation(rng, g.order()));
      CHECK(canonical_form(h).code == code);
      CHECK(isomorphic(g, h));
    }
  }
}

TEST_CASE("canonical isomorphism agrees with brute force") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + i % 7;
    const Graph g = oracle::random_graph(rng, n);
    Graph h = oracle::random_graph(rng, n);
    if (i % 3 == 0) h = g.relabeled(oracle::random_permutation(rng, n));
    CHECK(isomorphic(g, h) == oracle::brute_isomorphic(g, h));
  }
}

TEST_CASE("regular and highly symmetric graphs") {
  // Petersen graph as the complement of L(K5)
  const Graph petersen = [] {
    GraphBuilder b(10);
    for (int i = 0; i < 5; ++i) {
      b.add_edge(i, (i + 1) % 5);
      b.add_edge(5 + i, 5 + (i + 2) % 5);
      b.add_edge(i, 5 + i);
    }
    return std::move(b).build();
  }();
  const Graph l = line_graph(complete(5));
  GraphBuilder cb(10);
  for (Vertex u = 0; u < 10; ++u)
    for (Vertex v = u + 1; v < 10; ++v)
      if (!l.adjacent(u, v)) cb.add_edge(u, v);
  CHECK(isomorphic(petersen, std::move(cb).build()));
  CHECK_FALSE(isomorphic(disjoint_union(cycle(3), cycle(3)), cycle(6)));
  CHECK_FALSE(isomorphic(cycle(12), disjoint_union(cycle(6), cycle(6))));
}
