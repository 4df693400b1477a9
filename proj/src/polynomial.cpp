#include "cospec/polynomial.hpp"

#include <algorithm>

#include "cospec/error.hpp"

namespace cospec {

namespace {
const mpz_class kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> ascending) : c_(std::move(ascending)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  for (long v : ascending) c_.emplace_back(v);
  normalize();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial(std::vector<mpz_class>{c}); }

IntPolynomial IntPolynomial::monomial(const mpz_class& c, int degree) {
  if (degree < 0) throw InvalidArgument("monomial degree must be nonnegative");
  std::vector<mpz_class> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::x_minus(const mpz_class& r) { return IntPolynomial(std::vector<mpz_class>{-r, 1}); }

void IntPolynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPolynomial::coeff(int i) const {
  return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : kZero;
}

const mpz_class& IntPolynomial::leading() const { return c_.empty() ? kZero : c_.back(); }

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpq_class IntPolynomial::evaluate(const mpq_class& x) const {
  // Horner on numerator/denominator to stay in integers: sum c_i num^i den^(d-i).
  if (c_.empty()) return 0;
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  mpz_class acc = 0, den_pow = 1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * num + *it * den_pow;
    den_pow *= den;
  }
  mpz_class total_den = den_pow / den;
  mpq_class r(acc, total_den);
  r.canonicalize();
  return r;
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpz_class> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial result = constant(1), base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

mpz_class IntPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& c : c_) g = ::gcd(g, c);
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (c_.empty()) return {};
  mpz_class g = content();
  if (c_.back() < 0) g = -g;
  std::vector<mpz_class> v(c_);
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(v));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<mpz_class> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), c_[i].get_mpz_t(), o.c_[j].get_mpz_t());
  }
  c_ = std::move(r);
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const mpz_class& s) {
  for (auto& c : c_) c *= s;
  normalize();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

PolyDivision pseudo_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
  const int db = b.degree();
  if (a.degree() < db) return {{}, a};
  std::vector<mpz_class> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<mpz_class> quo(a.degree() - db + 1);
  const mpz_class& lb = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    // rem <- lb * rem - rem[k] x^(k-db) b ; quo <- lb * quo + rem[k] x^(k-db)
    mpz_class t = rem[k];
    for (auto& q : quo) q *= lb;
    quo[k - db] += t;
    for (int i = 0; i <= k; ++i) rem[i] *= lb;
    for (int i = 0; i <= db; ++i) rem[k - db + i] -= t * b.coeff(i);
  }
  return {IntPolynomial(std::move(quo)), IntPolynomial(std::move(rem))};
}

std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (a.is_zero()) return IntPolynomial{};
  const int db = b.degree();
  if (a.degree() < db) return std::nullopt;
  std::vector<mpz_class> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<mpz_class> quo(a.degree() - db + 1);
  const mpz_class& lb = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k] == 0) continue;
    if (!mpz_divisible_p(rem[k].get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_class t = rem[k] / lb;
    quo[k - db] = t;
    for (int i = 0; i <= db; ++i) rem[k - db + i] -= t * b.coeff(i);
  }
  if (std::any_of(rem.begin(), rem.end(), [](const mpz_class& c) { return c != 0; })) return std::nullopt;
  return IntPolynomial(std::move(quo));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial u = a.primitive_part(), v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPolynomial r = pseudo_divide(u, v).remainder;
    u = std::move(v);
    v = r.primitive_part();
  }
  if (u.degree() == 0) return IntPolynomial::constant(1);
  return u;
}

std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw InvalidArgument("square-free decomposition of the zero polynomial");
  std::vector<std::pair<IntPolynomial, int>> out;
  if (p.degree() == 0) return out;
  const IntPolynomial f = p.primitive_part();
  const IntPolynomial df = f.derivative();
  const IntPolynomial a0 = gcd(f, df);
  IntPolynomial b = *exact_quotient(f, a0);
  IntPolynomial c = *exact_quotient(df, a0);
  IntPolynomial d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    IntPolynomial a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = *exact_quotient(b, a);
    c = *exact_quotient(d, a);
    d = c - b.derivative();
  }
  return out;
}

IntPolynomial FactoredPoly::expand() const {
  IntPolynomial r = IntPolynomial::constant(1);
  for (const Factor& f : factors) r *= f.base.pow(static_cast<unsigned>(f.multiplicity));
  return r;
}

}  // namespace cospec
