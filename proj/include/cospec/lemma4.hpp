#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <cstddef>
#include <string>
#include <vector>

#include "cospec/canonical.hpp"
#include "cospec/census.hpp"
#include "cospec/graph.hpp"

namespace cospec {

/// Trees on exactly t vertices, one per isomorphism class, canonical order.
std::vector<Graph> trees(int t);

/// Generalized line graphs of type (1,0,...,0) of a tree over every choice of
/// root, one per isomorphism class, sorted by canonical code.
std::vector<Graph> glg_variants(const Graph& tree);

/// Cases of the classification of connected graphs with least eigenvalue
/// greater than -2, each paired with the discriminant it forces.
enum class DiscriminantCase {
  eight_vertices,     // d = 1
  seven_vertices,     // d = 2
  six_vertices,       // d = 3
  odd_unicyclic_line, // line graph of a unicyclic graph with an odd cycle, d = 4
  tree_glg,           // generalized line graph of a tree, d = 4
  tree_line,          // line graph of a tree on t >= 5 vertices, d = t
};

inline constexpr int kDiscriminantCaseCount = 6;
std::string case_label(DiscriminantCase c);

/// Structural family membership and the cases a single graph satisfies.
struct Lemma4Classification {
  mpz_class discriminant;
  bool odd_unicyclic_line = false;
  bool tree_glg = false;
  int tree_line_order = 0;  // vertices of the tree T with G = L(T), 0 if none
  std::vector<DiscriminantCase> cases;
};

/// Catalogue of line graphs of trees and odd unicyclic graphs and of tree
/// generalized line graphs on at most max_n vertices.
class Lemma4Classifier {
 public:
  explicit Lemma4Classifier(int max_n);

  int max_n() const { return max_n_; }
  /// g must have at most max_n vertices.
  Lemma4Classification classify(const Graph& g) const;
  /// Every graph in the catalogue.
  std::vector<Graph> family_members() const;

 private:
  struct Membership {
    bool odd_unicyclic_line = false;
    bool tree_glg = false;
    int tree_line_order = 0;
  };
  int max_n_;
  std::map<AdjacencyCode, Membership> families_;
};

struct AuditEntry {
  std::string graph6;
  int order = 0;
  mpz_class discriminant;
  std::string detail;
};

struct Lemma4Report {
  int max_n = 0;
  std::vector<std::size_t> graphs_checked;          // by order, index 0 unused
  std::array<std::size_t, kDiscriminantCaseCount> case_hits{};
  /// Matched no case at all.
  std::vector<AuditEntry> violations;
  /// Structural match whose discriminant is not the one the case forces.
  std::vector<AuditEntry> discriminant_mismatches;
  /// Line graphs of trees on fewer than 5 vertices that fit no other case;
  /// they satisfy d = t but sit outside the stated range t >= 5.
  std::vector<AuditEntry> small_tree_line_graphs;
  /// Members of the structural families whose least eigenvalue is not > -2.
  std::vector<AuditEntry> family_eigenvalue_failures;

  bool clean() const { return violations.empty() && discriminant_mismatches.empty() && family_eigenvalue_failures.empty(); }
};

/// Classifies every connected graph on at most max_n (<= 8) vertices with
/// least eigenvalue greater than -2.
Lemma4Report lemma4_audit(int max_n, const CensusOptions& options = {});

}  // namespace cospec
