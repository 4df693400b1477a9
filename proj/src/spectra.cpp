#include "cospec/spectra.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cospec/error.hpp"

namespace cospec {

namespace {

// Descending coefficients of det(xI - M) for the leading principal minors,
// extended one row/column at a time. mul(k, w) must return S*w where S is the
// leading k x k block; row(k, j) / col(k, j) give M[k][j] / M[j][k].
template <typename Entry, typename Mul>
IntPolynomial berkowitz(int n, const Entry& entry, const Mul& mul) {
  if (n == 0) return IntPolynomial::constant(1);
  std::vector<mpz_class> v{1, -mpz_class(entry(0, 0))};
  for (int k = 1; k < n; ++k) {
    std::vector<mpz_class> toeplitz(k + 2);
    toeplitz[0] = 1;
    toeplitz[1] = -mpz_class(entry(k, k));
    std::vector<mpz_class> w(k);
    for (int j = 0; j < k; ++j) w[j] = entry(j, k);
    for (int i = 2; i <= k + 1; ++i) {
      mpz_class dot = 0;
      for (int j = 0; j < k; ++j) dot += mpz_class(entry(k, j)) * w[j];
      toeplitz[i] = -dot;
      if (i <= k) w = mul(k, w);
    }
    std::vector<mpz_class> next(k + 2);
    for (int i = 0; i <= k + 1; ++i)
      for (int j = 0; j <= std::min(i, k); ++j) next[i] += toeplitz[i - j] * v[j];
    v = std::move(next);
  }
  std::reverse(v.begin(), v.end());
  return IntPolynomial(std::move(v));
}

}  // namespace

IntPolynomial char_poly(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw InvalidArgument("characteristic polynomial of a non-square matrix");
  auto entry = [&m](int i, int j) -> const mpz_class& { return m[i][j]; };
  auto mul = [&m](int k, const std::vector<mpz_class>& w) {
    std::vector<mpz_class> r(k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) r[i] += m[i][j] * w[j];
    return r;
  };
  return berkowitz(n, entry, mul);
}

IntPolynomial char_poly(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.neighbors(v);
  auto entry = [&g](int i, int j) { return g.adjacent(i, j) ? 1L : 0L; };
  auto mul = [&adj](int k, const std::vector<mpz_class>& w) {
    std::vector<mpz_class> r(k);
    for (int i = 0; i < k; ++i)
      for (Vertex j : adj[i]) {
        if (j >= k) break;
        r[i] += w[j];
      }
    return r;
  };
  return berkowitz(n, entry, mul);
}

mpz_class trace_power(const Graph& g, int k) {
  if (k < 0) throw InvalidArgument("trace_power needs k >= 0");
  const int n = g.order();
  if (k == 0) return n;
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.neighbors(v);
  // half = A^(k/2); trace(A^2m) = sum half_ij^2, trace(A^(2m+1)) = sum half_ij (half*A)_ij.
  std::vector<mpz_class> half(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) half[static_cast<std::size_t>(i) * n + i] = 1;
  auto times_a = [&](const std::vector<mpz_class>& m) {
    std::vector<mpz_class> r(m.size());
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        const mpz_class& x = m[static_cast<std::size_t>(i) * n + l];
        if (x == 0) continue;
        for (Vertex j : adj[l]) r[static_cast<std::size_t>(i) * n + j] += x;
      }
    return r;
  };
  for (int s = 0; s < k / 2; ++s) half = times_a(half);
  mpz_class t = 0;
  if (k % 2 == 0) {
    for (const auto& x : half) t += x * x;
  } else {
    const auto next = times_a(half);
    for (std::size_t i = 0; i < half.size(); ++i) t += half[i] * next[i];
  }
  return t;
}

bool cospectral(const Graph& g, const Graph& h) {
  return g.order() == h.order() && g.edge_count() == h.edge_count() && char_poly(g) == char_poly(h);
}

mpz_class discriminant(const Graph& g) { return abs(char_poly(g).evaluate(mpz_class(-2))); }

bool least_eig_gt_minus2(const Graph& g) {
  const IntPolynomial p = char_poly(g);
  return p.evaluate(mpz_class(-2)) != 0 && count_roots_below(p, mpq_class(-2)) == 0;
}

std::vector<RealRoot> eigenvalues_descending(const IntPolynomial& p) {
  RootIsolation iso = isolate_roots(p);
  if (iso.total_multiplicity() != p.degree())
    throw std::logic_error("characteristic polynomial has non-real roots");
  std::vector<RealRoot> out;
  for (auto it = iso.roots.rbegin(); it != iso.roots.rend(); ++it)
    for (int i = 0; i < it->multiplicity; ++i) out.push_back(*it);
  return out;
}

QuotientMatrix quotient_matrix(const Graph& g, const std::vector<int>& partition) {
  const int n = g.order();
  if (static_cast<int>(partition.size()) != n) throw InvalidArgument("partition must assign every vertex to a cell");
  int k = 0;
  for (int c : partition) {
    if (c < 0) throw InvalidArgument("cell indices must be nonnegative");
    k = std::max(k, c + 1);
  }
  std::vector<int> size(k, 0);
  for (int c : partition) ++size[c];
  for (int c = 0; c < k; ++c)
    if (size[c] == 0) throw InvalidArgument("cell " + std::to_string(c) + " is empty");

  QuotientMatrix q;
  q.order = k;
  q.partition = partition;
  q.entries.assign(k, std::vector<std::int64_t>(k, -1));
  for (Vertex v = 0; v < n; ++v) {
    std::vector<std::int64_t> into(k, 0);
    for (Vertex w : g.neighbors(v)) ++into[partition[w]];
    auto& row = q.entries[partition[v]];
    for (int c = 0; c < k; ++c) {
      if (row[c] < 0)
        row[c] = into[c];
      else if (row[c] != into[c])
        throw NotEquitable(v, c);
    }
  }
  IntMatrix m(k, std::vector<mpz_class>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m[i][j] = static_cast<long>(q.entries[i][j]);
  q.char_poly = char_poly(m);
  if (!exact_quotient(char_poly(g), q.char_poly))
    throw std::logic_error("quotient characteristic polynomial does not divide the graph's");
  return q;
}

bool interlacing_check(const Graph& g, const std::vector<Vertex>& subset) {
  const Graph h = g.induced(subset);
  const int n = g.order(), m = h.order();
  const auto lg = eigenvalues_descending(char_poly(g));
  const auto lh = eigenvalues_descending(char_poly(h));
  for (int i = 0; i < m; ++i) {
    if (compare(lg[i], lh[i]) < 0) return false;
    if (compare(lh[i], lg[n - m + i]) < 0) return false;
  }
  return true;
}

}  // namespace cospec
