#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "cospec/graph.hpp"
#include "cospec/polynomial.hpp"

namespace cospec {

/// Census orders above this are rejected outright.
inline constexpr int kCensusHardLimit = 10;
/// Order of the ancestors that partition the search into shards.
inline constexpr int kShardOrder = 5;

struct CensusFilters {
  std::optional<std::size_t> edges;
  std::optional<std::size_t> triangles;
  std::optional<bool> connected;
  std::optional<IntPolynomial> char_poly;
};

struct CensusQuery {
  int n = 0;
  CensusFilters filters;
  int ceiling = kCensusHardLimit;
};

struct CensusOptions {
  int workers = 0;  // 0: OpenMP default
};

struct CensusStats {
  std::size_t classes_scanned = 0;  // isomorphism classes on n vertices visited
  std::size_t emitted = 0;          // classes passing the filters
};

/// Streams one canonical representative per isomorphism class on query.n
/// vertices that passes the filters. Shards are the canonical ancestors on
/// kShardOrder vertices, in code order; within a shard output is sorted by
/// canonical code. The order does not depend on the worker count. The sink
/// runs on one thread at a time.
CensusStats enumerate_graphs(const CensusQuery& query, const std::function<void(const Graph&)>& sink,
                             const CensusOptions& options = {});
std::vector<Graph> collect_graphs(const CensusQuery& query, const CensusOptions& options = {});

/// Serial reference: grows every class level by level with a global
/// canonical-code set. Output sorted by canonical code.
std::vector<Graph> enumerate_graphs_reference(const CensusQuery& query);

std::size_t count_with_filter(int n, std::optional<std::size_t> edges, std::optional<std::size_t> triangles,
                              std::optional<bool> connected, const CensusOptions& options = {});

bool passes(const Graph& g, const CensusFilters& filters);

}  // namespace cospec
