#pragma once

#include <random>
#include <string>
#include <type_traits>
#include <vector>

#include "zdk/groebner.hpp"
#include "zdk/parse.hpp"
#include "zdk/poly.hpp"

namespace zdk::test_support {

inline RingPtr<Rationals> qring(std::vector<std::string> vars, OrderKind kind = OrderKind::DegRevLex) {
  std::size_t n = vars.size();
  return make_ring(Rationals{}, std::move(vars), TermOrder(kind, n));
}

inline RingPtr<PrimeField> fring(std::uint32_t p, std::vector<std::string> vars) {
  return make_ring(PrimeField(p), std::move(vars));
}

template <class K>
Poly<K> P(const RingPtr<K>& r, const std::string& s) {
  return parse_poly(r, s);
}

inline UPoly<Rationals> uq(std::vector<long> c) {
  std::vector<Rat> v;
  for (long x : c) v.emplace_back(x);
  return UPoly<Rationals>(Rationals{}, v);
}

inline UPoly<PrimeField> up(std::uint32_t p, std::vector<long long> c) {
  PrimeField F(p);
  std::vector<std::uint32_t> v;
  for (long long x : c) v.push_back(F.from_int(x));
  return UPoly<PrimeField>(F, v);
}

template <class K>
Poly<K> random_poly(const RingPtr<K>& r, std::mt19937& rng, int terms, int maxdeg) {
  std::vector<Term<K>> ts;
  for (int i = 0; i < terms; ++i) {
    PowerProduct t(r->nvars());
    for (std::size_t v = 0; v < r->nvars(); ++v) t.set(v, rng() % (maxdeg + 1));
    long num = static_cast<long>(rng() % 41) - 20;
    long den = static_cast<long>(rng() % 6) + 1;
    typename K::Elem c;
    if constexpr (std::is_same_v<K, Rationals>) {
      c = Rat(num, den);
      c.canonicalize();
    } else {
      c = r->field().from_int(num);
    }
    ts.push_back({t, c});
  }
  return Poly<K>(r, ts);
}

template <class K>
Ideal<K> ideal(const RingPtr<K>& r, std::vector<std::string> gens) {
  std::vector<Poly<K>> g;
  for (const auto& s : gens) g.push_back(P(r, s));
  return Ideal<K>(r, g);
}

// x_i^{d_i} + lower-degree noise for every variable, plus a combination of
// those: zero-dimensional, dimension prod d_i. Needs at least two variables.
template <class K>
std::vector<Poly<K>> random_zero_dim(const RingPtr<K>& r, std::mt19937& rng) {
  std::vector<Poly<K>> gens;
  std::size_t n = r->nvars();
  for (std::size_t i = 0; i < n; ++i) {
    unsigned d = 2 + rng() % 2;
    Poly<K> noise = random_poly(r, rng, 3, 1);
    while (noise.total_degree() >= d) noise = random_poly(r, rng, 3, 1);
    gens.push_back(Poly<K>::monomial(r, PowerProduct::variable(n, i, d), r->field().one()) + noise);
  }
  gens.push_back(gens[0] * random_poly(r, rng, 2, 1) + gens[1] * random_poly(r, rng, 2, 1));
  return gens;
}

}  // namespace zdk::test_support
