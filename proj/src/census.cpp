#include "cospec/census.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <string>

#include "canonical_search.hpp"
#include "cospec/builders.hpp"
#include "cospec/error.hpp"
#include "cospec/spectra.hpp"

namespace cospec {

namespace {

struct SmallGraph {
  int n = 0;
  std::array<std::uint64_t, kCensusHardLimit> rows{};
};

struct Workspace {
  detail::CanonicalSearch main;
  detail::CanonicalSearch aux;
};

std::uint64_t code_of(const detail::CanonicalSearch& cs) {
  return cs.best_code().empty() ? 0 : cs.best_code()[0];
}

SmallGraph relabel(const SmallGraph& g, const std::vector<int>& lab) {
  SmallGraph out;
  out.n = g.n;
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if ((g.rows[lab[i]] >> lab[j]) & 1U) out.rows[i] |= std::uint64_t{1} << j;
  return out;
}

SmallGraph remove_vertex(const SmallGraph& g, int w) {
  SmallGraph out;
  out.n = g.n - 1;
  const std::uint64_t low = (std::uint64_t{1} << w) - 1;
  for (int v = 0, i = 0; v < g.n; ++v) {
    if (v == w) continue;
    const std::uint64_t r = g.rows[v];
    out.rows[i++] = (r & low) | ((r >> 1) & ~low);
  }
  return out;
}

Graph to_graph(const SmallGraph& g) {
  GraphBuilder b(g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if ((g.rows[i] >> j) & 1U) b.add_edge(i, j);
  return std::move(b).build();
}

Graph from_code(int n, std::uint64_t code) {
  GraphBuilder b(n);
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if ((code >> (63 - k)) & 1U) b.add_edge(i, j);
  return std::move(b).build();
}

std::size_t edges_of(const SmallGraph& g) {
  std::size_t e = 0;
  for (int i = 0; i < g.n; ++i) e += std::popcount(g.rows[i]);
  return e / 2;
}

std::size_t triangles_of(const SmallGraph& g) {
  std::size_t t = 0;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if ((g.rows[i] >> j) & 1U) t += std::popcount(g.rows[i] & g.rows[j] & (~std::uint64_t{0} << (j + 1)));
  return t;
}

bool connected_of(const SmallGraph& g) {
  if (g.n == 0) return false;
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.rows[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == g.n;
}

// Trace identities: a target polynomial pins the edge and triangle counts.
CensusFilters with_trace_prefilters(CensusFilters f, int n) {
  if (f.char_poly && n >= 2) {
    const IntPolynomial& p = *f.char_poly;
    const mpz_class edges = -p.coeff(n - 2);
    const mpz_class triangles = n >= 3 ? mpz_class(-p.coeff(n - 3) / 2) : mpz_class(0);
    if (!f.edges && edges >= 0) f.edges = edges.get_ui();
    if (!f.triangles && triangles >= 0) f.triangles = triangles.get_ui();
  }
  return f;
}

bool passes_small(const SmallGraph& g, const CensusFilters& f) {
  if (f.edges && edges_of(g) != *f.edges) return false;
  if (f.triangles && triangles_of(g) != *f.triangles) return false;
  if (f.connected && connected_of(g) != *f.connected) return false;
  if (f.char_poly && char_poly(to_graph(g)) != *f.char_poly) return false;
  return true;
}

// Canonical construction path: the parent of a class is obtained by deleting
// the vertex at canonical position 0. A child is kept only if its new vertex
// could play that role; duplicates from one parent are merged locally.
template <typename Leaf>
void extend(Workspace& ws, const SmallGraph& g, std::uint64_t g_code, int target, Leaf& leaf) {
  if (g.n == target) {
    leaf(g, g_code);
    return;
  }
  const int m = g.n;
  std::array<int, kCensusHardLimit> deg{};
  for (int u = 0; u < m; ++u) deg[u] = std::popcount(g.rows[u]);
  std::vector<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    const int ds = std::popcount(s);
    bool min_degree = true;
    for (int u = 0; u < m && min_degree; ++u)
      if (deg[u] + static_cast<int>((s >> u) & 1U) < ds) min_degree = false;
    if (!min_degree) continue;

    SmallGraph c = g;
    c.n = m + 1;
    c.rows[m] = s;
    for (std::uint64_t t = s; t; t &= t - 1) c.rows[std::countr_zero(t)] |= std::uint64_t{1} << m;

    ws.main.run(c.n, 1, c.rows.data());
    const int w = ws.main.best_lab()[0];
    if (w != m) {
      if (ws.main.root_cell(w) != ws.main.root_cell(m)) continue;
      const SmallGraph parent = remove_vertex(c, w);
      ws.aux.run(parent.n, 1, parent.rows.data());
      if (code_of(ws.aux) != g_code) continue;
    }
    const std::uint64_t code = code_of(ws.main);
    if (std::find(seen.begin(), seen.end(), code) != seen.end()) continue;
    seen.push_back(code);
    const SmallGraph child = relabel(c, ws.main.best_lab());
    extend(ws, child, code, target, leaf);
  }
}

void check_query(const CensusQuery& q) {
  if (q.n < 0) throw InvalidArgument("census order must be nonnegative");
  const int limit = std::min(q.ceiling, kCensusHardLimit);
  if (q.n > limit)
    throw ResourceLimit("census order " + std::to_string(q.n) + " exceeds the ceiling " + std::to_string(limit));
}

}  // namespace

bool passes(const Graph& g, const CensusFilters& f) {
  if (f.edges && g.edge_count() != *f.edges) return false;
  if (f.triangles && triangle_count(g) != *f.triangles) return false;
  if (f.connected && is_connected(g) != *f.connected) return false;
  if (f.char_poly && char_poly(g) != *f.char_poly) return false;
  return true;
}

CensusStats enumerate_graphs(const CensusQuery& query, const std::function<void(const Graph&)>& sink,
                             const CensusOptions& options) {
  check_query(query);
  const int n = query.n;
  const CensusFilters filters = with_trace_prefilters(query.filters, n);

  struct Shard {
    SmallGraph root;
    std::uint64_t code;
  };
  std::vector<Shard> shards;
  {
    Workspace ws;
    auto collect = [&shards](const SmallGraph& g, std::uint64_t code) { shards.push_back({g, code}); };
    extend(ws, SmallGraph{}, 0, std::min(n, kShardOrder), collect);
    std::sort(shards.begin(), shards.end(), [](const Shard& a, const Shard& b) { return a.code < b.code; });
  }

  CensusStats stats;
  const int shard_count = static_cast<int>(shards.size());
  const int workers = options.workers > 0 ? options.workers : omp_get_max_threads();
#pragma omp parallel num_threads(workers)
  {
    Workspace ws;
    std::size_t scanned = 0;
#pragma omp for ordered schedule(dynamic, 1)
    for (int i = 0; i < shard_count; ++i) {
      std::vector<std::uint64_t> found;
      auto leaf = [&](const SmallGraph& g, std::uint64_t code) {
        ++scanned;
        if (passes_small(g, filters)) found.push_back(code);
      };
      extend(ws, shards[i].root, shards[i].code, n, leaf);
      std::sort(found.begin(), found.end());
#pragma omp ordered
      {
        stats.emitted += found.size();
        for (std::uint64_t code : found) sink(from_code(n, code));
      }
    }
#pragma omp atomic
    stats.classes_scanned += scanned;
  }
  return stats;
}

std::vector<Graph> collect_graphs(const CensusQuery& query, const CensusOptions& options) {
  std::vector<Graph> out;
  enumerate_graphs(query, [&out](const Graph& g) { out.push_back(g); }, options);
  return out;
}

std::vector<Graph> enumerate_graphs_reference(const CensusQuery& query) {
  check_query(query);
  std::map<std::uint64_t, SmallGraph> level{{0, SmallGraph{}}};
  detail::CanonicalSearch cs;
  for (int m = 0; m < query.n; ++m) {
    std::map<std::uint64_t, SmallGraph> next;
    for (const auto& [code, g] : level) {
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
        SmallGraph c = g;
        c.n = m + 1;
        c.rows[m] = s;
        for (std::uint64_t t = s; t; t &= t - 1) c.rows[std::countr_zero(t)] |= std::uint64_t{1} << m;
        cs.run(c.n, 1, c.rows.data());
        const std::uint64_t child_code = code_of(cs);
        if (!next.contains(child_code)) next.emplace(child_code, relabel(c, cs.best_lab()));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (const auto& [code, g] : level)
    if (passes_small(g, query.filters)) out.push_back(to_graph(g));
  return out;
}

std::size_t count_with_filter(int n, std::optional<std::size_t> edges, std::optional<std::size_t> triangles,
                              std::optional<bool> connected, const CensusOptions& options) {
  CensusQuery q;
  q.n = n;
  q.filters.edges = edges;
  q.filters.triangles = triangles;
  q.filters.connected = connected;
  return enumerate_graphs(q, [](const Graph&) {}, options).emitted;
}

}  // namespace cospec
