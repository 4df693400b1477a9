#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "cospec/graph.hpp"
#include "cospec/polynomial.hpp"
#include "cospec/roots.hpp"

namespace cospec {

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// det(xI - M) by Berkowitz's division-free recurrence.
IntPolynomial char_poly(const IntMatrix& m);
/// Adjacency characteristic polynomial; monic of degree n.
IntPolynomial char_poly(const Graph& g);

/// trace(A^k), computed from matrix powers independently of char_poly.
mpz_class trace_power(const Graph& g, int k);

bool cospectral(const Graph& g, const Graph& h);

/// |p(-2)| for the characteristic polynomial p.
mpz_class discriminant(const Graph& g);

bool least_eig_gt_minus2(const Graph& g);

/// Eigenvalues in descending order, each repeated by its multiplicity.
std::vector<RealRoot> eigenvalues_descending(const IntPolynomial& char_poly);

struct QuotientMatrix {
  int order = 0;
  std::vector<std::vector<std::int64_t>> entries;  // entries[i][j]: neighbours in cell j of a vertex in cell i
  std::vector<int> partition;                      // cell index per vertex
  IntPolynomial char_poly;                         // divides the graph's characteristic polynomial
};

/// Quotient of an equitable partition; cells are numbered 0..k-1 and must be
/// nonempty. Throws NotEquitable with the first offending (vertex, cell).
QuotientMatrix quotient_matrix(const Graph& g, const std::vector<int>& partition);

/// Cauchy interlacing between g and its induced subgraph on `subset`,
/// decided exactly.
bool interlacing_check(const Graph& g, const std::vector<Vertex>& subset);

}  // namespace cospec
