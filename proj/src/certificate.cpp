#include "cospec/certificate.hpp"

#include "cospec/builders.hpp"
#include "cospec/canonical.hpp"
#include "cospec/error.hpp"
#include "cospec/graph6.hpp"
#include "cospec/spectra.hpp"

namespace cospec {

std::string library_version() { return COSPEC_VERSION; }

DsCertificate verify_ds(const Graph& g, const VerifyOptions& options) {
  DsCertificate cert;
  cert.target_graph6 = encode_graph6(g);
  cert.target_charpoly = char_poly(g);
  cert.space.n = g.order();
  cert.space.ceiling = options.ceiling;
  cert.space.filters.edges = g.edge_count();
  cert.space.filters.triangles = triangle_count(g);
  cert.space.filters.char_poly = cert.target_charpoly;

  const AdjacencyCode target_code = canonical_form(g).code;
  const CensusStats stats = enumerate_graphs(
      cert.space,
      [&](const Graph& candidate) {
        if (canonical_form(candidate).code != target_code) cert.mates.push_back(encode_graph6(candidate));
      },
      CensusOptions{options.workers});
  cert.graphs_scanned = stats.classes_scanned;
  cert.exhaustive = true;
  return cert;
}

namespace {

nlohmann::json coefficients_json(const IntPolynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.get_str());
  return arr;
}

IntPolynomial coefficients_from_json(const nlohmann::json& arr) {
  std::vector<mpz_class> coeffs;
  for (const auto& c : arr) {
    mpz_class v;
    if (v.set_str(c.get<std::string>(), 10) != 0) throw ParseError("invalid decimal coefficient", 0);
    coeffs.push_back(v);
  }
  return IntPolynomial(std::move(coeffs));
}

template <typename T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json to_json(const DsCertificate& cert) {
  const CensusFilters& f = cert.space.filters;
  return {
      {"target_graph6", cert.target_graph6},
      {"charpoly", coefficients_json(cert.target_charpoly)},
      {"space",
       {{"n", cert.space.n},
        {"ceiling", cert.space.ceiling},
        {"filters",
         {{"edges", optional_json(f.edges)},
          {"triangles", optional_json(f.triangles)},
          {"connected", optional_json(f.connected)},
          {"charpoly_match", f.char_poly.has_value()}}}}},
      {"mates", cert.mates},
      {"exhaustive", cert.exhaustive},
      {"graphs_scanned", cert.graphs_scanned},
      {"tool_version", cert.tool_version},
  };
}

DsCertificate certificate_from_json(const nlohmann::json& j) {
  DsCertificate cert;
  cert.target_graph6 = j.at("target_graph6").get<std::string>();
  cert.target_charpoly = coefficients_from_json(j.at("charpoly"));
  const auto& space = j.at("space");
  cert.space.n = space.at("n").get<int>();
  cert.space.ceiling = space.value("ceiling", kCensusHardLimit);
  const auto& f = space.at("filters");
  if (!f.at("edges").is_null()) cert.space.filters.edges = f.at("edges").get<std::size_t>();
  if (!f.at("triangles").is_null()) cert.space.filters.triangles = f.at("triangles").get<std::size_t>();
  if (!f.at("connected").is_null()) cert.space.filters.connected = f.at("connected").get<bool>();
  if (f.value("charpoly_match", false)) cert.space.filters.char_poly = cert.target_charpoly;
  cert.mates = j.at("mates").get<std::vector<std::string>>();
  cert.exhaustive = j.at("exhaustive").get<bool>();
  cert.graphs_scanned = j.at("graphs_scanned").get<std::size_t>();
  cert.tool_version = j.at("tool_version").get<std::string>();
  return cert;
}

CertificateCheck recheck_certificate(const nlohmann::json& j) {
  CertificateCheck check;
  DsCertificate cert;
  Graph target;
  try {
    cert = certificate_from_json(j);
    target = decode_graph6(cert.target_graph6);
  } catch (const std::exception& e) {
    check.problems.push_back(std::string("unreadable certificate: ") + e.what());
    return check;
  }
  const IntPolynomial p = char_poly(target);
  if (p != cert.target_charpoly) check.problems.push_back("stored polynomial differs from the target's");
  if (target.order() != cert.space.n) check.problems.push_back("search order differs from the target's order");
  std::vector<AdjacencyCode> seen{canonical_form(target).code};
  for (const std::string& code : cert.mates) {
    Graph mate;
    try {
      mate = decode_graph6(code);
    } catch (const std::exception& e) {
      check.problems.push_back("mate " + code + " does not decode: " + e.what());
      continue;
    }
    if (char_poly(mate) != p) check.problems.push_back("mate " + code + " is not cospectral with the target");
    const AdjacencyCode c = canonical_form(mate).code;
    if (std::find(seen.begin(), seen.end(), c) != seen.end())
      check.problems.push_back("mate " + code + " is isomorphic to the target or an earlier mate");
    seen.push_back(c);
  }
  check.consistent = check.problems.empty();
  check.determined_by_spectrum = check.consistent && cert.determined_by_spectrum();
  return check;
}

}  // namespace cospec
