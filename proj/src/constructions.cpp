#include "cospec/constructions.hpp"

#include <string>

#include "cospec/builders.hpp"
#include "cospec/error.hpp"

namespace cospec {

namespace {

void push(FactoredPoly& f, IntPolynomial base, int multiplicity) {
  if (multiplicity > 0) f.factors.push_back({std::move(base), multiplicity});
}

IntPolynomial quadratic(long b, long c) { return IntPolynomial{c, b, 1}; }

}  // namespace

FactoredPoly pineapple_charpoly(int p, int q) {
  if (p < 3 || q < 1) throw InvalidArgument("pineapple_charpoly needs p >= 3 and q >= 1");
  const long P = p, Q = q;
  FactoredPoly f;
  push(f, IntPolynomial::x(), q - 1);
  push(f, IntPolynomial{1, 1}, p - 2);
  push(f, IntPolynomial{Q * (P - 2), -(P + Q - 1), -(P - 2), 1}, 1);
  return f;
}

FactoredPoly knm_charpoly(int n, int m) {
  if (m < 1 || m >= n) throw InvalidArgument("knm_charpoly needs 1 <= m < n");
  const long N = n, M = m;
  FactoredPoly f;
  push(f, IntPolynomial::x(), m - 1);
  push(f, IntPolynomial{1, 1}, n - m - 1);
  push(f, quadratic(-(N - M - 1), -M * (N - M)), 1);
  return f;
}

Graph prop2_graph(int k) {
  if (k < 2) throw InvalidArgument("prop2_graph needs k >= 2, got " + std::to_string(k));
  GraphBuilder b(3 * k);
  for (int i = 0; i < k; ++i)
    for (int j = k; j < 3 * k; ++j) b.add_edge(i, j);
  for (int block = 1; block <= 2; ++block)
    for (int i = block * k; i < (block + 1) * k; ++i)
      for (int j = i + 1; j < (block + 1) * k; ++j) b.add_edge(i, j);
  return std::move(b).build();
}

Graph prop2_mate(int k) { return add_isolated(prop2_graph(k), k * (k - 1)); }

FactoredPoly prop2_charpoly(int k) {
  if (k < 2) throw InvalidArgument("prop2_charpoly needs k >= 2");
  const long K = k;
  FactoredPoly f;
  push(f, IntPolynomial::x(), k - 1);
  push(f, IntPolynomial{1, 1}, 2 * k - 2);
  push(f, IntPolynomial::x_minus(K - 1), 1);
  push(f, quadratic(-(K - 1), -2 * K * K), 1);
  return f;
}

Prop3Params prop3_params(int k, int p) {
  if (k < 2) throw InvalidArgument("prop3 needs k >= 2, got " + std::to_string(k));
  if (p < k + 2) throw InvalidArgument("prop3 needs p >= k+2, got k=" + std::to_string(k) + " p=" + std::to_string(p));
  const long num = static_cast<long>(k) * (k - 1);
  const long den = p - k - 1;
  if (num % den != 0)
    throw InvalidArgument("prop3: k(k-1) mod (p-k-1) = " + std::to_string(num % den) + " for k=" +
                          std::to_string(k) + " p=" + std::to_string(p));
  Prop3Params out;
  out.k = k;
  out.p = p;
  out.r = static_cast<int>(num / den);
  out.q = out.r * (p - k);
  return out;
}

std::vector<Prop3Params> prop3_enumerate(int k) {
  if (k < 2) throw InvalidArgument("prop3 needs k >= 2");
  const long num = static_cast<long>(k) * (k - 1);
  std::vector<Prop3Params> out;
  for (long d = 1; d <= num; ++d)
    if (num % d == 0) out.push_back(prop3_params(k, static_cast<int>(k + 1 + d)));
  return out;
}

Graph prop3_mate(const Prop3Params& params) {
  const Prop3Params v = prop3_params(params.k, params.p);
  const Graph big = complete_minus_clique(v.p + v.r, v.k + v.r);
  return add_isolated(disjoint_union(big, complete(v.k)), v.k * (v.k - 2));
}

FactoredPoly prop3_charpoly(const Prop3Params& params) {
  const Prop3Params v = prop3_params(params.k, params.p);
  const long P = v.p, K = v.k, R = v.r;
  FactoredPoly f;
  push(f, IntPolynomial::x(), v.r * (v.p - v.k) - 1);
  push(f, IntPolynomial{1, 1}, v.p - 2);
  push(f, IntPolynomial::x_minus(K - 1), 1);
  push(f, quadratic(-(P - K - 1), -(K + R) * (P - K)), 1);
  return f;
}

std::array<Graph, 3> corollary_triple(int p) {
  if (p < 4 || p % 2 != 0) throw InvalidArgument("corollary needs an even p >= 4, got " + std::to_string(p));
  const int k = p / 2;
  return {pineapple(p, k * k), prop2_mate(k), prop3_mate(prop3_params(k, p))};
}

}  // namespace cospec
