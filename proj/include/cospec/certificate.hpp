#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "cospec/census.hpp"
#include "cospec/graph.hpp"
#include "cospec/polynomial.hpp"

namespace cospec {

std::string library_version();

/// Record of an exhaustive search for cospectral mates of one graph.
struct DsCertificate {
  std::string target_graph6;
  IntPolynomial target_charpoly;
  CensusQuery space;
  std::vector<std::string> mates;  // graph6, canonical representatives
  bool exhaustive = false;
  std::size_t graphs_scanned = 0;
  std::string tool_version = library_version();

  bool determined_by_spectrum() const { return exhaustive && mates.empty(); }
};

struct VerifyOptions {
  int ceiling = kCensusHardLimit;
  int workers = 0;
};

/// Scans every isomorphism class on g.order() vertices with g's edge and
/// triangle counts and keeps those with g's characteristic polynomial that are
/// not isomorphic to g.
DsCertificate verify_ds(const Graph& g, const VerifyOptions& options = {});

nlohmann::json to_json(const DsCertificate& cert);
DsCertificate certificate_from_json(const nlohmann::json& j);

struct CertificateCheck {
  bool consistent = false;  // every stored claim re-derives
  bool determined_by_spectrum = false;
  std::vector<std::string> problems;
};

/// Re-derives the certificate's claims from the JSON alone: the target's
/// polynomial, and for every mate cospectrality and non-isomorphism.
CertificateCheck recheck_certificate(const nlohmann::json& j);

}  // namespace cospec
