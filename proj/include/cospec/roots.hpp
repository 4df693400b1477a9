#pragma once

#include <gmpxx.h>

#include <vector>

#include "cospec/polynomial.hpp"

namespace cospec {

/// Sturm sequence of a square-free polynomial.
class SturmChain {
 public:
  explicit SturmChain(const IntPolynomial& squarefree);

  /// Distinct real roots in (lo, hi].
  int count(const mpq_class& lo, const mpq_class& hi) const;
  /// Distinct real roots in (-inf, c].
  int count_up_to(const mpq_class& c) const;
  int total() const;

 private:
  int variations(const mpq_class& x) const;
  int variations_at_minus_infinity() const;
  int variations_at_plus_infinity() const;

  std::vector<IntPolynomial> chain_;
};

/// One real root of `squarefree`, the only one in (lo, hi].
struct RealRoot {
  IntPolynomial squarefree;
  mpq_class lo;
  mpq_class hi;
  int multiplicity = 1;
};

/// Pairwise disjoint isolating intervals sorted ascending.
struct RootIsolation {
  std::vector<RealRoot> roots;

  int total_multiplicity() const;
};

/// Largest denominator bisection may produce before giving up (2^64).
const mpz_class& bisection_denominator_cap();

RootIsolation isolate_roots(const IntPolynomial& p);
/// Real roots strictly below c, counted with multiplicity.
int count_roots_below(const IntPolynomial& p, const mpq_class& c);
/// Real roots counted with multiplicity; equals the degree iff all roots are real.
int count_real_roots(const IntPolynomial& p);

/// Halves the isolating interval of r.
void bisect(RealRoot& r);
/// Exact comparison of two real algebraic numbers: -1, 0 or 1.
int compare(RealRoot a, RealRoot b);

}  // namespace cospec
