#include "cospec/lemma4.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cospec/builders.hpp"
#include "cospec/canonical.hpp"
#include "cospec/error.hpp"
#include "cospec/graph6.hpp"
#include "cospec/spectra.hpp"

namespace cospec {

std::vector<Graph> trees(int t) {
  if (t < 1) throw InvalidArgument("trees need at least one vertex");
  std::map<AdjacencyCode, Graph> level{{canonical_form(Graph(1)).code, Graph(1)}};
  for (int m = 1; m < t; ++m) {
    std::map<AdjacencyCode, Graph> next;
    for (const auto& [code, tree] : level)
      for (Vertex v = 0; v < m; ++v) {
        GraphBuilder b(m + 1);
        for (const Edge& e : tree.edges()) b.add_edge(e.u, e.v);
        b.add_edge(v, m);
        const Graph grown = std::move(b).build();
        const CanonicalForm form = canonical_form(grown);
        next.try_emplace(form.code, grown.relabeled(form.perm));
      }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [code, tree] : level) out.push_back(tree);
  return out;
}

std::vector<Graph> glg_variants(const Graph& tree) {
  if (!is_tree(tree)) throw InvalidArgument("glg_variants needs a tree");
  std::map<AdjacencyCode, Graph> variants;
  for (Vertex root = 0; root < tree.order(); ++root) {
    const Graph g = generalized_line_graph_1(tree, root);
    variants.try_emplace(canonical_form(g).code, g);
  }
  std::vector<Graph> out;
  for (auto& [code, g] : variants) out.push_back(g);
  return out;
}

std::string case_label(DiscriminantCase c) {
  switch (c) {
    case DiscriminantCase::eight_vertices: return "(i) 8 vertices, d=1";
    case DiscriminantCase::seven_vertices: return "(ii) 7 vertices, d=2";
    case DiscriminantCase::six_vertices: return "(iii) 6 vertices, d=3";
    case DiscriminantCase::odd_unicyclic_line: return "(iv) line graph of odd unicyclic, d=4";
    case DiscriminantCase::tree_glg: return "(v) generalized line graph of tree, d=4";
    case DiscriminantCase::tree_line: return "(vi) line graph of tree on t>=5 vertices, d=t";
  }
  return "?";
}

namespace {

// Length of the unique cycle created by adding edge (u,v) to a tree.
int cycle_length(const Graph& tree, Vertex u, Vertex v) {
  std::vector<int> dist(tree.order(), -1);
  std::vector<Vertex> queue{u};
  dist[u] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Vertex w : tree.neighbors(queue[i]))
      if (dist[w] < 0) {
        dist[w] = dist[queue[i]] + 1;
        queue.push_back(w);
      }
  return dist[v] + 1;
}

}  // namespace

Lemma4Classifier::Lemma4Classifier(int max_n) : max_n_(max_n) {
  if (max_n < 1) throw InvalidArgument("classifier needs max_n >= 1");
  auto add = [this](const Graph& g) -> Membership& { return families_[canonical_form(g).code]; };
  // Line graph of a tree on t vertices has t-1 vertices.
  for (int t = 2; t <= max_n + 1; ++t)
    for (const Graph& tree : trees(t)) {
      add(line_graph(tree)).tree_line_order = t;
      if (t + 1 <= max_n)
        for (const Graph& g : glg_variants(tree)) add(g).tree_glg = true;
    }
  // Unicyclic graphs on m vertices are trees plus one edge; their line graphs have m vertices.
  for (int m = 3; m <= max_n; ++m) {
    std::set<AdjacencyCode> done;
    for (const Graph& tree : trees(m))
      for (Vertex u = 0; u < m; ++u)
        for (Vertex v = u + 1; v < m; ++v) {
          if (tree.adjacent(u, v) || cycle_length(tree, u, v) % 2 == 0) continue;
          GraphBuilder b(m);
          for (const Edge& e : tree.edges()) b.add_edge(e.u, e.v);
          b.add_edge(u, v);
          const Graph unicyclic = std::move(b).build();
          if (!done.insert(canonical_form(unicyclic).code).second) continue;
          add(line_graph(unicyclic)).odd_unicyclic_line = true;
        }
  }
}

std::vector<Graph> Lemma4Classifier::family_members() const {
  std::vector<Graph> out;
  for (const auto& [code, member] : families_) out.push_back(graph_from_code(code));
  return out;
}

Lemma4Classification Lemma4Classifier::classify(const Graph& g) const {
  if (g.order() > max_n_) throw InvalidArgument("graph is larger than the classifier's catalogue");
  Lemma4Classification c;
  c.discriminant = discriminant(g);
  const auto it = families_.find(canonical_form(g).code);
  if (it != families_.end()) {
    c.odd_unicyclic_line = it->second.odd_unicyclic_line;
    c.tree_glg = it->second.tree_glg;
    c.tree_line_order = it->second.tree_line_order;
  }
  const int m = g.order();
  const mpz_class& d = c.discriminant;
  if (m == 8 && d == 1) c.cases.push_back(DiscriminantCase::eight_vertices);
  if (m == 7 && d == 2) c.cases.push_back(DiscriminantCase::seven_vertices);
  if (m == 6 && d == 3) c.cases.push_back(DiscriminantCase::six_vertices);
  if (c.odd_unicyclic_line && d == 4) c.cases.push_back(DiscriminantCase::odd_unicyclic_line);
  if (c.tree_glg && d == 4) c.cases.push_back(DiscriminantCase::tree_glg);
  if (c.tree_line_order >= 5 && d == c.tree_line_order) c.cases.push_back(DiscriminantCase::tree_line);
  return c;
}

Lemma4Report lemma4_audit(int max_n, const CensusOptions& options) {
  if (max_n < 1 || max_n > 8) throw InvalidArgument("lemma4_audit supports 1 <= max_n <= 8");
  Lemma4Report report;
  report.max_n = max_n;
  report.graphs_checked.assign(max_n + 1, 0);

  const Lemma4Classifier classifier(max_n);
  for (const Graph& g : classifier.family_members())
    if (!least_eig_gt_minus2(g))
      report.family_eigenvalue_failures.push_back({encode_graph6(g), g.order(), discriminant(g), "family member"});

  for (int m = 1; m <= max_n; ++m) {
    CensusQuery q;
    q.n = m;
    q.filters.connected = true;
    enumerate_graphs(
        q,
        [&](const Graph& g) {
          if (!least_eig_gt_minus2(g)) return;
          ++report.graphs_checked[m];
          const Lemma4Classification c = classifier.classify(g);
          const mpz_class& d = c.discriminant;
          for (DiscriminantCase hit : c.cases) ++report.case_hits[static_cast<int>(hit)];

          const AuditEntry entry{encode_graph6(g), m, d, ""};
          auto note = [&](std::vector<AuditEntry>& list, const std::string& detail) {
            AuditEntry e = entry;
            e.detail = detail;
            list.push_back(std::move(e));
          };
          if (c.odd_unicyclic_line && d != 4) note(report.discriminant_mismatches, "odd unicyclic line graph but d != 4");
          if (c.tree_glg && d != 4) note(report.discriminant_mismatches, "tree generalized line graph but d != 4");
          if (c.tree_line_order > 0 && d != c.tree_line_order)
            note(report.discriminant_mismatches,
                 "line graph of a tree on " + std::to_string(c.tree_line_order) + " vertices but d != t");

          if (!c.cases.empty()) return;
          if (c.tree_line_order > 0 && c.tree_line_order < 5 && d == c.tree_line_order)
            note(report.small_tree_line_graphs,
                 "line graph of a tree on " + std::to_string(c.tree_line_order) + " vertices");
          else
            note(report.violations, "matches no case");
        },
        options);
  }
  return report;
}

}  // namespace cospec
