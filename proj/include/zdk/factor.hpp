#pragma once

#include <utility>
#include <vector>

#include "zdk/unipoly.hpp"

namespace zdk {

/// f = unit * prod f_i^{m_i} with the f_i monic, irreducible and pairwise
/// distinct, sorted by (degree, coefficients).
template <class K>
struct Factorization {
  typename K::Elem unit;
  std::vector<std::pair<UPoly<K>, int>> factors;

  UPoly<K> expand(const K& field) const;
  std::size_t distinct() const { return factors.size(); }
};

// Squarefree split, distinct-degree and equal-degree (Cantor–Zassenhaus)
// stages. Throws ZeroPolynomial.
Factorization<PrimeField> factor_uni_fp(const UPoly<PrimeField>& f);

// Zassenhaus: factor modulo a few small primes, Hensel lift the most
// economical one, recombine. Throws ZeroPolynomial.
Factorization<Rationals> factor_uni_q(const UPoly<Rationals>& f);

}  // namespace zdk
