#include <doctest.h>

#include <map>
#include <set>

#include "cospec/builders.hpp"
#include "cospec/canonical.hpp"
#include "cospec/census.hpp"
#include "cospec/certificate.hpp"
#include "cospec/constructions.hpp"
#include "cospec/error.hpp"
#include "cospec/graph6.hpp"
#include "cospec/lemma4.hpp"
#include "cospec/spectra.hpp"
#include "oracles.hpp"

using namespace cospec;

namespace {

std::vector<std::string> codes(const std::vector<Graph>& gs) {
  std::vector<std::string> out;
  for (const Graph& g : gs) out.push_back(encode_graph6(g));
  return out;
}

CensusQuery order(int n) {
  CensusQuery q;
  q.n = n;
  return q;
}

bool lists(const DsCertificate& cert, const Graph& g) {
  return std::any_of(cert.mates.begin(), cert.mates.end(),
                     [&](const std::string& m) { return isomorphic(decode_graph6(m), g); });
}

}  // namespace

TEST_CASE("class counts") {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 0; n <= 8; ++n) {
    std::size_t seen = 0;
    const CensusStats stats = enumerate_graphs(order(n), [&](const Graph&) { ++seen; });
    CHECK(seen == expected[n]);
    CHECK(stats.emitted == expected[n]);
    CHECK(stats.classes_scanned == expected[n]);
    CHECK(mpz_class(static_cast<unsigned long>(expected[n])) == oracle::burnside_class_count(n));
  }
}

TEST_CASE("census matches labelled enumeration with brute-force deduplication") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::vector<bool>> classes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask)
      classes.insert(oracle::brute_min_code(oracle::from_mask(n, mask)));
    std::set<std::vector<bool>> emitted;
    for (const Graph& g : collect_graphs(order(n))) emitted.insert(oracle::brute_min_code(g));
    CHECK(emitted == classes);
  }
}

TEST_CASE("census output has no isomorphic duplicates") {
  for (int n = 1; n <= 8; ++n) {
    std::set<AdjacencyCode> seen;
    enumerate_graphs(order(n), [&](const Graph& g) { CHECK(seen.insert(canonical_form(g).code).second); });
  }
}

TEST_CASE("parallel census agrees with the serial reference") {
  for (int n = 0; n <= 7; ++n) {
    auto parallel = codes(collect_graphs(order(n)));
    auto reference = codes(enumerate_graphs_reference(order(n)));
    std::sort(parallel.begin(), parallel.end());
    std::sort(reference.begin(), reference.end());
    CHECK(parallel == reference);
  }
}

TEST_CASE("output order does not depend on the worker count") {
  for (int n : {6, 7, 8}) {
    const auto one = codes(collect_graphs(order(n), {1}));
    for (int w : {2, 3, 4}) CHECK(codes(collect_graphs(order(n), {w})) == one);
  }
}

TEST_CASE("filters") {
  CHECK(count_with_filter(7, 17, 20, true) == 0);
  CHECK(count_with_filter(7, 17, std::nullopt, true) == 10);
  CHECK(count_with_filter(3, 3, 1, true) == 1);
  CHECK(count_with_filter(4, std::nullopt, std::nullopt, true) == 6);
  CHECK(count_with_filter(5, 4, std::nullopt, true) == 3);
  CHECK(count_with_filter(6, std::nullopt, 0, std::nullopt) == 38);

  const auto ten = collect_graphs([] {
    CensusQuery q;
    q.n = 7;
    q.filters.edges = 17;
    q.filters.connected = true;
    return q;
  }());
  REQUIRE(ten.size() == 10);
  for (const Graph& g : ten) {
    CHECK(g.edge_count() == 17);
    CHECK(is_connected(g));
    CHECK(triangle_count(g) != 20);
  }

  CensusQuery spectral;
  spectral.n = 8;
  spectral.filters.char_poly = char_poly(pineapple(4, 4));
  CHECK(collect_graphs(spectral).size() == 3);

  CensusFilters f;
  f.connected = false;
  CHECK(passes(empty_graph(2), f));
  CHECK_FALSE(passes(complete(2), f));
}

TEST_CASE("census ceiling") {
  CHECK_THROWS_AS(collect_graphs(order(11)), ResourceLimit);
  CensusQuery q = order(6);
  q.ceiling = 5;
  CHECK_THROWS_AS(collect_graphs(q), ResourceLimit);
  CHECK_THROWS_AS(enumerate_graphs_reference(order(11)), ResourceLimit);
  CHECK_THROWS_AS(count_with_filter(12, 3, std::nullopt, std::nullopt), ResourceLimit);
  CHECK_THROWS_AS(verify_ds(pineapple(8, 3)), ResourceLimit);
  CHECK_THROWS_AS(verify_ds(pineapple(4, 3), {6, 0}), ResourceLimit);
  CHECK_THROWS_AS(collect_graphs(order(-1)), InvalidArgument);
}

TEST_CASE("prefilter soundness: cospectral classes share edges and triangles") {
  for (int n = 5; n <= 7; ++n) {
    std::map<std::vector<std::string>, std::pair<std::size_t, std::size_t>> seen;
    enumerate_graphs(order(n), [&](const Graph& g) {
      std::vector<std::string> key;
      const IntPolynomial p = char_poly(g);
      for (const auto& c : p.coefficients()) key.push_back(c.get_str());
      const std::pair<std::size_t, std::size_t> et{g.edge_count(), triangle_count(g)};
      const auto [it, fresh] = seen.try_emplace(key, et);
      if (!fresh) CHECK(it->second == et);
    });
  }
}

TEST_CASE("determined-by-spectrum verification") {
  const DsCertificate k43 = verify_ds(pineapple(4, 3));
  CHECK(k43.exhaustive);
  CHECK(k43.mates.empty());
  CHECK(k43.determined_by_spectrum());
  CHECK(k43.graphs_scanned == 1044);

  const DsCertificate k44 = verify_ds(pineapple(4, 4));
  CHECK(k44.mates.size() == 2);
  CHECK(lists(k44, prop2_mate(2)));
  CHECK(lists(k44, prop3_mate(prop3_params(2, 4))));
  CHECK_FALSE(k44.determined_by_spectrum());

  for (int p = 3; p <= 6; ++p) CHECK(verify_ds(pineapple(p, 2)).mates.empty());
  for (int q = 1; q <= 5; ++q) CHECK(verify_ds(pineapple(3, q)).mates.empty());

  const DsCertificate k53 = verify_ds(pineapple(5, 3));
  CHECK(k53.mates.size() == 1);
  CHECK(lists(k53, prop3_mate(prop3_params(2, 5))));
}

TEST_CASE("verification is symmetric evidence") {
  std::vector<Graph> targets{pineapple(4, 4), pineapple(5, 3), star(4)};
  int certificates = 0;
  for (const Graph& target : targets) {
    const DsCertificate cert = verify_ds(target);
    ++certificates;
    REQUIRE_FALSE(cert.mates.empty());
    for (const std::string& m : cert.mates) {
      const DsCertificate back = verify_ds(decode_graph6(m));
      ++certificates;
      CHECK(lists(back, target));
      CHECK(back.mates.size() == cert.mates.size());
    }
  }
  CHECK(certificates >= 5);
}

TEST_CASE("verification is independent of the worker count") {
  const auto one = verify_ds(pineapple(4, 4), {10, 1});
  const auto three = verify_ds(pineapple(4, 4), {10, 3});
  CHECK(one.mates == three.mates);
  CHECK(one.graphs_scanned == three.graphs_scanned);
}

TEST_CASE("discriminant classification examples") {
  const Lemma4Classifier classifier(8);
  const auto p4 = classifier.classify(path(4));
  CHECK(p4.discriminant == 5);
  CHECK(p4.tree_line_order == 5);
  CHECK(std::find(p4.cases.begin(), p4.cases.end(), DiscriminantCase::tree_line) != p4.cases.end());

  const auto k42 = classifier.classify(pineapple(4, 2));
  CHECK(k42.discriminant == 4);
  CHECK(k42.tree_glg);
  CHECK(std::find(k42.cases.begin(), k42.cases.end(), DiscriminantCase::tree_glg) != k42.cases.end());

  const Graph paw_line = line_graph(pineapple(3, 1));
  const auto odd = classifier.classify(paw_line);
  CHECK(odd.discriminant == 4);
  CHECK(odd.odd_unicyclic_line);

  CHECK_THROWS_AS(classifier.classify(path(9)), InvalidArgument);
  CHECK_THROWS_AS(lemma4_audit(9), InvalidArgument);
  CHECK_THROWS_AS(lemma4_audit(0), InvalidArgument);
}

TEST_CASE("discriminant audit on small orders") {
  const Lemma4Report r = lemma4_audit(7);
  CHECK(r.clean());
  CHECK(r.violations.empty());
  CHECK(r.discriminant_mismatches.empty());
  const std::vector<std::size_t> expected{0, 1, 1, 2, 5, 14, 48, 176};
  CHECK(r.graphs_checked == expected);
  REQUIRE(r.small_tree_line_graphs.size() == 2);
  CHECK(r.small_tree_line_graphs[0].graph6 == "@");
  CHECK(r.small_tree_line_graphs[1].graph6 == "A_");
}

TEST_CASE("generalized line graph variants") {
  for (int k = 2; k <= 8; ++k) CHECK(glg_variants(star(k)).size() == 2);
  for (int t = 2; t <= 7; ++t)
    for (const Graph& tree : trees(t)) {
      const auto vs = glg_variants(tree);
      CHECK(!vs.empty());
      CHECK(static_cast<int>(vs.size()) <= tree.order());
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) CHECK_FALSE(isomorphic(vs[i], vs[j]));
    }
  CHECK_THROWS_AS(glg_variants(cycle(4)), InvalidArgument);
}
