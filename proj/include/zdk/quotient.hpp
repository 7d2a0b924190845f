#pragma once

#include <unordered_map>
#include <vector>

#include "zdk/groebner.hpp"

namespace zdk {

/// Linear algebra view of P/I for a zero-dimensional I: coordinates in the
/// quotient basis, with the normal forms of non-basis terms memoized.
/// Not thread-safe (the memo is filled lazily).
template <class K>
class QuotientAlgebra {
 public:
  using Elem = typename K::Elem;
  using Vec = std::vector<Elem>;

  // Throws NotZeroDimensional.
  explicit QuotientAlgebra(GBPtr<K> gb);

  const GBPtr<K>& gb() const { return gb_; }
  const RingPtr<K>& ring() const { return gb_->ring(); }
  const K& field() const { return gb_->ring()->field(); }
  const QuotientBasis& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }

  Vec zero() const { return Vec(dim(), field().zero()); }
  Vec unit(std::size_t i) const;
  // Coordinates of NF(t).
  const Vec& term_coords(const PowerProduct& t);
  // Coordinates of NF(f).
  Vec coords(const Poly<K>& f);
  Poly<K> to_poly(const Vec& v) const;
  // Coordinates of NF(f * v); f should already be in normal form for speed.
  Vec mul(const Poly<K>& f, const Vec& v);
  // Coordinates of NF(mu(f)) by Horner's rule.
  Vec eval(const UPoly<K>& mu, const Poly<K>& f);

 private:
  GBPtr<K> gb_;
  QuotientBasis basis_;
  std::unordered_map<PowerProduct, Vec, PowerProductHash> memo_;
  std::vector<Vec> units_;
};

}  // namespace zdk
