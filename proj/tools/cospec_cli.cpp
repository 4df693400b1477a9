// Command-line front end for the cospec library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cospec/builders.hpp"
#include "cospec/canonical.hpp"
#include "cospec/census.hpp"
#include "cospec/certificate.hpp"
#include "cospec/constructions.hpp"
#include "cospec/error.hpp"
#include "cospec/graph6.hpp"
#include "cospec/lemma4.hpp"
#include "cospec/poly_text.hpp"
#include "cospec/spectra.hpp"

namespace {

enum ExitCode : int { kOk = 0, kUsage = 2, kNegative = 3, kResourceLimit = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string graph6;
  std::vector<int> pineapple;

  void attach(CLI::App* cmd) {
    auto* g6 = cmd->add_option("--graph6", graph6, "graph in graph6 format");
    auto* pq = cmd->add_option("--pineapple", pineapple, "pineapple graph K_P^Q")->expected(2);
    g6->excludes(pq);
  }

  bool is_pineapple() const { return !pineapple.empty(); }

  cospec::Graph graph() const {
    if (is_pineapple()) return cospec::pineapple(pineapple[0], pineapple[1]);
    if (graph6.empty()) throw UsageError("one of --graph6 or --pineapple is required");
    return cospec::decode_graph6(graph6);
  }
};

std::string to_dot(const cospec::Graph& g) {
  std::string out = "graph G {\n";
  for (cospec::Vertex v = 0; v < g.order(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (const auto& e : g.edges()) out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
  return out + "}\n";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int report_mates(const std::vector<cospec::Graph>& mates, const cospec::Graph& reference) {
  bool ok = true;
  for (const auto& m : mates) {
    std::cout << cospec::encode_graph6(m) << "\n";
  }
  for (std::size_t i = 0; i < mates.size(); ++i) {
    const bool cosp = cospec::cospectral(mates[i], reference);
    const bool iso = cospec::isomorphic(mates[i], reference);
    ok = ok && cosp && !iso;
  }
  for (std::size_t i = 0; i < mates.size(); ++i)
    for (std::size_t j = i + 1; j < mates.size(); ++j) ok = ok && !cospec::isomorphic(mates[i], mates[j]);
  std::cout << "check: reference " << cospec::encode_graph6(reference) << " cospectral " << yes_no(ok)
            << ", pairwise nonisomorphic " << yes_no(ok) << "\n";
  return ok ? kOk : kNegative;
}

int run(int argc, char** argv) {
  CLI::App app{"Pineapple graphs, cospectral mates and spectral characterisation checks"};
  app.require_subcommand(1);
  int exit_code = kOk;

  // pineapple
  auto* cmd_pineapple = app.add_subcommand("pineapple", "emit the pineapple graph K_P^Q");
  int pp = 0, pq = 0;
  bool as_dot = false, as_graph6 = false;
  cmd_pineapple->add_option("P", pp, "clique order")->required();
  cmd_pineapple->add_option("Q", pq, "number of pendant edges")->required();
  auto* dot_flag = cmd_pineapple->add_flag("--dot", as_dot, "Graphviz output");
  cmd_pineapple->add_flag("--graph6", as_graph6, "graph6 output (default)")->excludes(dot_flag);
  cmd_pineapple->callback([&] {
    const cospec::Graph g = cospec::pineapple(pp, pq);
    std::cout << (as_dot ? to_dot(g) : cospec::encode_graph6(g) + "\n");
  });

  // charpoly
  auto* cmd_charpoly = app.add_subcommand("charpoly", "characteristic polynomial");
  GraphSource charpoly_src;
  bool factored = false;
  charpoly_src.attach(cmd_charpoly);
  cmd_charpoly->add_flag("--factored", factored, "closed-form factorisation (pineapple only)");
  cmd_charpoly->callback([&] {
    if (factored) {
      if (!charpoly_src.is_pineapple()) throw UsageError("--factored needs a closed form; use --pineapple");
      std::cout << cospec::to_factored_string(
                       cospec::pineapple_charpoly(charpoly_src.pineapple[0], charpoly_src.pineapple[1]))
                << "\n";
      return;
    }
    std::cout << cospec::to_expanded_string(cospec::char_poly(charpoly_src.graph())) << "\n";
  });

  // mate
  auto* cmd_mate = app.add_subcommand("mate", "cospectral mates of pineapple graphs");
  cmd_mate->require_subcommand(1);
  int mk = 0, mp = 0;
  auto* mate_prop2 = cmd_mate->add_subcommand("prop2", "mate of K_{2K}^{K^2} of order 3K plus isolated vertices");
  mate_prop2->add_option("K", mk)->required();
  mate_prop2->callback([&] {
    exit_code = report_mates({cospec::prop2_mate(mk)}, cospec::pineapple(2 * mk, mk * mk));
  });
  auto* mate_prop3 = cmd_mate->add_subcommand("prop3", "mate of K_P^{r(P-K)} with r = K(K-1)/(P-K-1)");
  mate_prop3->add_option("K", mk)->required();
  mate_prop3->add_option("P", mp)->required();
  mate_prop3->callback([&] {
    const cospec::Prop3Params params = cospec::prop3_params(mk, mp);
    exit_code = report_mates({cospec::prop3_mate(params)}, cospec::pineapple(params.p, params.q));
  });
  auto* mate_cor = cmd_mate->add_subcommand("corollary", "two mates of K_P^{(P/2)^2}");
  mate_cor->add_option("P", mp)->required();
  mate_cor->callback([&] {
    const auto triple = cospec::corollary_triple(mp);
    exit_code = report_mates({triple[1], triple[2]}, triple[0]);
  });

  // verify-ds
  auto* cmd_verify = app.add_subcommand("verify-ds", "exhaustive search for cospectral mates");
  GraphSource verify_src;
  verify_src.attach(cmd_verify);
  int max_n = cospec::kCensusHardLimit, workers = 0;
  std::string out_path;
  cmd_verify->add_option("--max-n", max_n, "census ceiling")->check(CLI::Range(0, cospec::kCensusHardLimit));
  cmd_verify->add_option("--out", out_path, "write the certificate JSON here");
  cmd_verify->add_option("--workers", workers, "worker threads (0: all available)")->check(CLI::NonNegativeNumber);
  cmd_verify->callback([&] {
    const cospec::DsCertificate cert = cospec::verify_ds(verify_src.graph(), {max_n, workers});
    const std::string text = cospec::to_json(cert).dump(2);
    std::cout << text << "\n";
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      if (!f) throw std::runtime_error("cannot write " + out_path);
      f << text << "\n";
    }
    exit_code = cert.determined_by_spectrum() ? kOk : kNegative;
  });

  // census
  auto* cmd_census = app.add_subcommand("census", "one graph6 line per isomorphism class");
  int census_n = 0;
  std::optional<std::size_t> census_edges, census_triangles;
  bool census_connected = false;
  cmd_census->add_option("--n", census_n, "vertex count")->required();
  cmd_census->add_option("--edges", census_edges);
  cmd_census->add_option("--triangles", census_triangles);
  cmd_census->add_flag("--connected", census_connected);
  cmd_census->add_option("--workers", workers)->check(CLI::NonNegativeNumber);
  cmd_census->callback([&] {
    cospec::CensusQuery q;
    q.n = census_n;
    q.filters.edges = census_edges;
    q.filters.triangles = census_triangles;
    if (census_connected) q.filters.connected = true;
    const auto stats = cospec::enumerate_graphs(
        q, [](const cospec::Graph& g) { std::cout << cospec::encode_graph6(g) << "\n"; }, {workers});
    std::cout.flush();
    std::cerr << stats.emitted << " graphs\n";
  });

  // lemma4-audit
  auto* cmd_audit = app.add_subcommand("lemma4-audit", "classify connected graphs with least eigenvalue > -2");
  int audit_n = 8;
  cmd_audit->add_option("--max-n", audit_n)->check(CLI::Range(1, 8));
  cmd_audit->callback([&] {
    const cospec::Lemma4Report r = cospec::lemma4_audit(audit_n);
    std::cout << "order  graphs\n";
    for (int m = 1; m <= audit_n; ++m) std::cout << m << "      " << r.graphs_checked[m] << "\n";
    std::cout << "\ncase                                              hits\n";
    for (int c = 0; c < cospec::kDiscriminantCaseCount; ++c)
      std::cout << cospec::case_label(static_cast<cospec::DiscriminantCase>(c)) << "  " << r.case_hits[c] << "\n";
    auto list = [](const char* title, const std::vector<cospec::AuditEntry>& entries) {
      std::cout << "\n" << title << ": " << entries.size() << "\n";
      for (const auto& e : entries)
        std::cout << "  " << e.graph6 << "  n=" << e.order << "  d=" << e.discriminant.get_str() << "  " << e.detail
                  << "\n";
    };
    list("violations", r.violations);
    list("discriminant mismatches", r.discriminant_mismatches);
    list("family members with least eigenvalue <= -2", r.family_eigenvalue_failures);
    list("line graphs of trees on fewer than 5 vertices", r.small_tree_line_graphs);
    exit_code = r.clean() ? kOk : kNegative;
  });

  // cospectral
  auto* cmd_cosp = app.add_subcommand("cospectral", "compare two graphs' spectra");
  std::string code1, code2;
  cmd_cosp->add_option("CODE1", code1)->required();
  cmd_cosp->add_option("CODE2", code2)->required();
  cmd_cosp->callback([&] {
    const bool same = cospec::cospectral(cospec::decode_graph6(code1), cospec::decode_graph6(code2));
    std::cout << (same ? "cospectral" : "not cospectral") << "\n";
    exit_code = same ? kOk : kNegative;
  });

  // recheck
  auto* cmd_recheck = app.add_subcommand("recheck", "re-verify a verify-ds certificate offline");
  std::string cert_path;
  cmd_recheck->add_option("FILE", cert_path)->required()->check(CLI::ExistingFile);
  cmd_recheck->callback([&] {
    std::ifstream f(cert_path);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(f);
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("not a JSON certificate: ") + e.what());
    }
    const cospec::CertificateCheck check = cospec::recheck_certificate(j);
    for (const auto& problem : check.problems) std::cout << "problem: " << problem << "\n";
    std::cout << (check.consistent ? "consistent" : "inconsistent") << "; "
              << (check.determined_by_spectrum ? "determined by spectrum" : "not determined by spectrum") << "\n";
    exit_code = check.consistent ? kOk : kNegative;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const cospec::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const cospec::InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kUsage;
  } catch (const cospec::ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
