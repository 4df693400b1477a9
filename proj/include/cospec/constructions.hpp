#pragma once

#include <array>
#include <vector>

#include "cospec/graph.hpp"
#include "cospec/polynomial.hpp"

namespace cospec {

/// x^(q-1) (x+1)^(p-2) (x^3 - (p-2)x^2 - (p+q-1)x + q(p-2)); zero exponents omitted.
FactoredPoly pineapple_charpoly(int p, int q);

/// x^(m-1) (x+1)^(n-m-1) (x^2 - (n-m-1)x - m(n-m)).
FactoredPoly knm_charpoly(int n, int m);

/// Order 3k: an independent k-set joined to two disjoint k-cliques, vertex
/// blocks in that order.
Graph prop2_graph(int k);
/// prop2_graph(k) plus k(k-1) isolated vertices; cospectral with K_{2k}^{k^2}.
Graph prop2_mate(int k);
/// x^(k-1) (x+1)^(2k-2) (x-k+1) (x^2 - (k-1)x - 2k^2).
FactoredPoly prop2_charpoly(int k);

struct Prop3Params {
  int p = 0;
  int k = 0;
  int r = 0;  // k(k-1) / (p-k-1)
  int q = 0;  // r(p-k)

  friend bool operator==(const Prop3Params&, const Prop3Params&) = default;
};

Prop3Params prop3_params(int k, int p);
/// Every valid p for k (one per divisor d of k(k-1), p = k+1+d), ascending.
std::vector<Prop3Params> prop3_enumerate(int k);
/// (K_{p+r} minus K_{k+r}) + K_k + k(k-2) K_1; cospectral with K_p^{r(p-k)}.
Graph prop3_mate(const Prop3Params& params);
/// x^(r(p-k)-1) (x+1)^(p-2) (x-k+1) (x^2 - (p-k-1)x - (k+r)(p-k)).
FactoredPoly prop3_charpoly(const Prop3Params& params);

/// (K_p^q, prop2_mate(p/2), prop3_mate(k=p/2, p)) with q = (p/2)^2.
std::array<Graph, 3> corollary_triple(int p);

}  // namespace cospec
