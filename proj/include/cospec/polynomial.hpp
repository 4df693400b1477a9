#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cospec {

/// Dense polynomial over the integers with arbitrary-precision coefficients,
/// stored ascending (index = degree). The zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  static IntPolynomial constant(const mpz_class& c);
  static IntPolynomial monomial(const mpz_class& c, int degree);
  static IntPolynomial x() { return monomial(1, 1); }
  /// x - r
  static IntPolynomial x_minus(const mpz_class& r);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const mpz_class& coeff(int i) const;
  std::span<const mpz_class> coefficients() const noexcept { return c_; }
  const mpz_class& leading() const;

  mpz_class evaluate(const mpz_class& x) const;
  mpq_class evaluate(const mpq_class& x) const;
  int sign_at(const mpq_class& x) const { return sgn(evaluate(x)); }

  IntPolynomial derivative() const;
  IntPolynomial pow(unsigned e) const;
  mpz_class content() const;
  /// Divides by the content and makes the leading coefficient positive.
  IntPolynomial primitive_part() const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  IntPolynomial& operator*=(const mpz_class& s);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator*(IntPolynomial a, const mpz_class& s) { return a *= s; }
  IntPolynomial operator-() const;
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize();
  std::vector<mpz_class> c_;
};

struct PolyDivision {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// lc(b)^(deg a - deg b + 1) * a = quotient * b + remainder.
PolyDivision pseudo_divide(const IntPolynomial& a, const IntPolynomial& b);
/// Quotient when b divides a in Z[x], nullopt otherwise. b must be nonzero.
std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b);
/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// p = c * prod f_i^i with f_i square-free and pairwise coprime (Yun).
/// Returns the nonconstant f_i with their exponents i, ascending in i.
std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p);

struct Factor {
  IntPolynomial base;
  int multiplicity = 1;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Closed-form product of integer polynomial powers.
struct FactoredPoly {
  std::vector<Factor> factors;

  IntPolynomial expand() const;
  friend bool operator==(const FactoredPoly&, const FactoredPoly&) = default;
};

}  // namespace cospec
