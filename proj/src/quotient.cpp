#include "zdk/quotient.hpp"

#include "zdk/errors.hpp"

namespace zdk {

template <class K>
QuotientAlgebra<K>::QuotientAlgebra(GBPtr<K> gb) : gb_(std::move(gb)), basis_(quotient_basis(*gb_)) {
  units_.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    Vec e = zero();
    e[i] = field().one();
    units_.push_back(std::move(e));
  }
}

template <class K>
typename QuotientAlgebra<K>::Vec QuotientAlgebra<K>::unit(std::size_t i) const {
  return units_.at(i);
}

template <class K>
const typename QuotientAlgebra<K>::Vec& QuotientAlgebra<K>::term_coords(const PowerProduct& t) {
  int b = basis_.find(t);
  if (b >= 0) return units_[static_cast<std::size_t>(b)];
  auto it = memo_.find(t);
  if (it != memo_.end()) return it->second;

  const K& F = field();
  std::size_t n = t.arity();
  // t = x_j * s with s outside the basis when possible; otherwise t is a
  // minimal leading term and its normal form is minus the tail of that element.
  int j = -1;
  for (std::size_t v = 0; v < n && j < 0; ++v) {
    if (t[v] == 0) continue;
    PowerProduct s = PowerProduct::variable(n, v).quotient_into(t);
    if (basis_.find(s) < 0) j = static_cast<int>(v);
  }
  Vec out = zero();
  if (j < 0) {
    int k = gb_->find_divisor(t);
    const Poly<K>& g = gb_->elements().at(static_cast<std::size_t>(k));
    for (std::size_t i = 1; i < g.terms().size(); ++i) {
      int idx = basis_.find(g.terms()[i].pp);
      out[static_cast<std::size_t>(idx)] = F.neg(g.terms()[i].c);
    }
  } else {
    PowerProduct xj = PowerProduct::variable(n, static_cast<std::size_t>(j));
    const Vec& s = term_coords(xj.quotient_into(t));  // node-based map: references stay valid
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (F.is_zero(s[i])) continue;
      PowerProduct u = basis_.terms[i] * xj;
      int idx = basis_.find(u);
      if (idx >= 0) {
        F.add_to(out[static_cast<std::size_t>(idx)], s[i]);
      } else {
        const Vec& w = term_coords(u);
        for (std::size_t k = 0; k < w.size(); ++k)
          if (!F.is_zero(w[k])) F.add_mul(out[k], s[i], w[k]);
      }
    }
  }
  return memo_.emplace(t, std::move(out)).first->second;
}

template <class K>
typename QuotientAlgebra<K>::Vec QuotientAlgebra<K>::coords(const Poly<K>& f_in) {
  Poly<K> f = adopt(ring(), f_in);
  const K& F = field();
  Vec out = zero();
  for (const auto& t : f.terms()) {
    int idx = basis_.find(t.pp);
    if (idx >= 0) {
      F.add_to(out[static_cast<std::size_t>(idx)], t.c);
      continue;
    }
    const Vec& w = term_coords(t.pp);
    for (std::size_t k = 0; k < w.size(); ++k)
      if (!F.is_zero(w[k])) F.add_mul(out[k], t.c, w[k]);
  }
  return out;
}

template <class K>
Poly<K> QuotientAlgebra<K>::to_poly(const Vec& v) const {
  if (v.size() != dim()) throw DimensionMismatch(dim(), v.size());
  std::vector<Term<K>> terms;
  for (std::size_t i = dim(); i-- > 0;)
    if (!field().is_zero(v[i])) terms.push_back({basis_.terms[i], v[i]});
  return Poly<K>::from_sorted(ring(), std::move(terms));
}

template <class K>
typename QuotientAlgebra<K>::Vec QuotientAlgebra<K>::mul(const Poly<K>& f_in, const Vec& v) {
  if (v.size() != dim()) throw DimensionMismatch(dim(), v.size());
  Poly<K> f = adopt(ring(), f_in);
  const K& F = field();
  Vec out = zero();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (F.is_zero(v[i])) continue;
    for (const auto& t : f.terms()) {
      Elem c = F.mul(v[i], t.c);
      PowerProduct u = basis_.terms[i] * t.pp;
      int idx = basis_.find(u);
      if (idx >= 0) {
        F.add_to(out[static_cast<std::size_t>(idx)], c);
      } else {
        const Vec& w = term_coords(u);
        for (std::size_t k = 0; k < w.size(); ++k)
          if (!F.is_zero(w[k])) F.add_mul(out[k], c, w[k]);
      }
    }
  }
  return out;
}

template <class K>
typename QuotientAlgebra<K>::Vec QuotientAlgebra<K>::eval(const UPoly<K>& mu, const Poly<K>& f_in) {
  Vec acc = zero();
  if (dim() == 0) return acc;
  Poly<K> f = gb_->normal_form(f_in);
  const auto& c = mu.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = mul(f, acc);
    field().add_to(acc[0], c[i]);
  }
  return acc;
}

template class QuotientAlgebra<Rationals>;
template class QuotientAlgebra<PrimeField>;

}  // namespace zdk
