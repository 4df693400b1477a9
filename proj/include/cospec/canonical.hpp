#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

/// Upper-triangle adjacency bits of a labelled graph, pairs (i,j) with i<j
/// taken column-wise (by j, then i), packed most-significant bit first.
/// Lexicographic order on the bit string equals the defaulted ordering.
struct AdjacencyCode {
  int n = 0;
  std::vector<std::uint64_t> words;

  auto operator<=>(const AdjacencyCode&) const = default;
};

struct AdjacencyCodeHash {
  std::size_t operator()(const AdjacencyCode& c) const noexcept;
};

AdjacencyCode adjacency_code(const Graph& g);
/// Inverse of adjacency_code.
Graph graph_from_code(const AdjacencyCode& code);

struct CanonicalForm {
  std::vector<Vertex> perm;  // perm[v] = canonical label of v
  AdjacencyCode code;        // adjacency_code(g.relabeled(perm))
};

/// Canonical labelling by equitable refinement and individualisation with
/// automorphism pruning; the smallest leaf code wins. Practical up to a few
/// dozen vertices on the structured graphs used here.
CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);
bool isomorphic(const Graph& g, const Graph& h);

}  // namespace cospec
