#include "cospec/roots.hpp"

#include <algorithm>

#include "cospec/error.hpp"

namespace cospec {

namespace {

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Scaling by a positive constant keeps every sign in the chain.
IntPolynomial without_positive_content(const IntPolynomial& p) {
  const mpz_class g = p.content();
  std::vector<mpz_class> v(p.coefficients().begin(), p.coefficients().end());
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(v));
}

}  // namespace

SturmChain::SturmChain(const IntPolynomial& squarefree) {
  if (squarefree.is_zero()) throw InvalidArgument("Sturm chain of the zero polynomial");
  chain_.push_back(squarefree);
  IntPolynomial d = squarefree.derivative();
  if (d.is_zero()) return;
  chain_.push_back(d);
  while (chain_.back().degree() > 0) {
    const IntPolynomial& a = chain_[chain_.size() - 2];
    const IntPolynomial& b = chain_.back();
    const int e = a.degree() - b.degree() + 1;
    // pseudo remainder = lc(b)^e * (a mod b); restore the sign of a mod b.
    IntPolynomial r = pseudo_divide(a, b).remainder;
    const bool flip = sgn(b.leading()) < 0 && (e % 2 == 1);
    if (r.is_zero()) break;
    chain_.push_back(without_positive_content(flip ? r : -r));
  }
}

int SturmChain::variations(const mpq_class& x) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& p : chain_) s.push_back(p.sign_at(x));
  return sign_changes(s);
}

int SturmChain::variations_at_minus_infinity() const {
  std::vector<int> s;
  for (const auto& p : chain_) s.push_back(sgn(p.leading()) * (p.degree() % 2 == 0 ? 1 : -1));
  return sign_changes(s);
}

int SturmChain::variations_at_plus_infinity() const {
  std::vector<int> s;
  for (const auto& p : chain_) s.push_back(sgn(p.leading()));
  return sign_changes(s);
}

int SturmChain::count(const mpq_class& lo, const mpq_class& hi) const {
  if (hi <= lo) return 0;
  return variations(lo) - variations(hi);
}

int SturmChain::count_up_to(const mpq_class& c) const { return variations_at_minus_infinity() - variations(c); }

int SturmChain::total() const { return variations_at_minus_infinity() - variations_at_plus_infinity(); }

int RootIsolation::total_multiplicity() const {
  int t = 0;
  for (const auto& r : roots) t += r.multiplicity;
  return t;
}

const mpz_class& bisection_denominator_cap() {
  static const mpz_class cap = mpz_class(1) << 64;
  return cap;
}

namespace {

mpq_class midpoint(const mpq_class& lo, const mpq_class& hi) {
  mpq_class mid = (lo + hi) / 2;
  if (mid.get_den() > bisection_denominator_cap())
    throw IsolationFailure("root separation needs denominators beyond 2^64");
  return mid;
}

// Strict upper bound on |root|: 1 + ceil(max |a_i| / |a_n|).
mpz_class cauchy_bound(const IntPolynomial& p) {
  mpz_class m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, mpz_class(abs(p.coeff(i))));
  mpz_class lead = abs(p.leading());
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), m.get_mpz_t(), lead.get_mpz_t());
  return q + 1;
}

void isolate_into(const IntPolynomial& f, const SturmChain& chain, int mult, const mpq_class& lo,
                  const mpq_class& hi, int n_roots, std::vector<RealRoot>& out) {
  if (n_roots == 0) return;
  if (n_roots == 1) {
    out.push_back({f, lo, hi, mult});
    return;
  }
  mpq_class mid = midpoint(lo, hi);
  const int left = chain.count(lo, mid);
  isolate_into(f, chain, mult, lo, mid, left, out);
  isolate_into(f, chain, mult, mid, hi, n_roots - left, out);
}

bool overlaps(const RealRoot& a, const RealRoot& b) { return a.lo < b.hi && b.lo < a.hi; }

}  // namespace

void bisect(RealRoot& r) {
  mpq_class mid = midpoint(r.lo, r.hi);
  SturmChain chain(r.squarefree);
  if (chain.count(r.lo, mid) == 1)
    r.hi = mid;
  else
    r.lo = mid;
}

RootIsolation isolate_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw InvalidArgument("cannot isolate the roots of the zero polynomial");
  RootIsolation iso;
  for (const auto& [f, mult] : squarefree_decomposition(p)) {
    SturmChain chain(f);
    const mpq_class bound(cauchy_bound(f));
    isolate_into(f, chain, mult, -bound, bound, chain.count(-bound, bound), iso.roots);
  }
  // Roots of distinct square-free factors are distinct; shrink until disjoint.
  bool clash = true;
  while (clash) {
    clash = false;
    std::sort(iso.roots.begin(), iso.roots.end(), [](const RealRoot& a, const RealRoot& b) { return a.lo < b.lo; });
    for (std::size_t i = 0; i + 1 < iso.roots.size(); ++i) {
      RealRoot& a = iso.roots[i];
      RealRoot& b = iso.roots[i + 1];
      if (!overlaps(a, b)) continue;
      clash = true;
      bisect(a.hi - a.lo >= b.hi - b.lo ? a : b);
    }
  }
  return iso;
}

int count_roots_below(const IntPolynomial& p, const mpq_class& c) {
  if (p.is_zero()) throw InvalidArgument("cannot count the roots of the zero polynomial");
  int total = 0;
  for (const auto& [f, mult] : squarefree_decomposition(p)) {
    SturmChain chain(f);
    int below = chain.count_up_to(c);
    if (f.sign_at(c) == 0) --below;
    total += mult * below;
  }
  return total;
}

int count_real_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw InvalidArgument("cannot count the roots of the zero polynomial");
  int total = 0;
  for (const auto& [f, mult] : squarefree_decomposition(p)) total += mult * SturmChain(f).total();
  return total;
}

int compare(RealRoot a, RealRoot b) {
  const IntPolynomial common = gcd(a.squarefree, b.squarefree);
  const bool may_share = common.degree() > 0;
  std::optional<SturmChain> common_chain;
  if (may_share) common_chain.emplace(common);
  while (true) {
    if (a.hi <= b.lo) return -1;
    if (b.hi <= a.lo) return 1;
    if (may_share) {
      // A common root inside the overlap is the unique root of both intervals.
      const mpq_class lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
      if (common_chain->count(lo, hi) > 0) return 0;
    }
    bisect(a.hi - a.lo >= b.hi - b.lo ? a : b);
  }
}

}  // namespace cospec
