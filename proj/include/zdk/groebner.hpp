#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "zdk/poly.hpp"

namespace zdk {

/// The reduced Gröbner basis of an ideal for the ordering of ring(): monic,
/// self-reduced, sorted by increasing leading term.
template <class K>
class ReducedGB {
 public:
  // `elems` must already form a reduced Gröbner basis in `ring`; they are only sorted.
  ReducedGB(RingPtr<K> ring, std::vector<Poly<K>> elems);

  const RingPtr<K>& ring() const { return ring_; }
  const TermOrder& order() const { return ring_->order(); }
  const std::vector<Poly<K>>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }

  bool is_zero_ideal() const { return elems_.empty(); }
  bool is_unit_ideal() const { return elems_.size() == 1 && elems_[0].is_constant(); }
  // Every variable has a pure power among the leading terms.
  bool is_zero_dimensional() const;

  // f may live in any ring with the same field and variables.
  Poly<K> normal_form(const Poly<K>& f) const;
  bool contains(const Poly<K>& f) const { return normal_form(f).is_zero(); }
  // Index of an element whose leading term divides t, or -1.
  int find_divisor(const PowerProduct& t) const;

  // Canonical text "[g1, g2, ...]".
  std::string to_string() const;
  bool operator==(const ReducedGB& o) const { return elems_ == o.elems_; }

 private:
  RingPtr<K> ring_;
  std::vector<Poly<K>> elems_;
};

template <class K>
using GBPtr = std::shared_ptr<const ReducedGB<K>>;

// Buchberger's algorithm (normal selection strategy, Gebauer–Möller criteria)
// for the ordering of `ring`. The first `known_gb` generators must already be
// a reduced GB for that ordering; pairs among them are skipped.
template <class K>
GBPtr<K> buchberger(const RingPtr<K>& ring, const std::vector<Poly<K>>& gens, std::size_t known_gb = 0);

// Converts f into `ring` (same field and variables); cheap when already there.
template <class K>
Poly<K> adopt(const RingPtr<K>& ring, const Poly<K>& f);

/// Generators plus a shared, lazily filled cache of reduced Gröbner bases keyed
/// by term ordering. Copies share the cache.
template <class K>
class Ideal {
 public:
  Ideal(RingPtr<K> ring, std::vector<Poly<K>> gens);

  const RingPtr<K>& ring() const { return ring_; }
  const K& field() const { return ring_->field(); }
  const std::vector<Poly<K>>& generators() const { return gens_; }

  // Reduced GB for the ring's ordering (or `ord`); computed once, then cached.
  GBPtr<K> reduced_gb() const { return reduced_gb(ring_->order()); }
  GBPtr<K> reduced_gb(const TermOrder& ord) const;
  bool has_cached_gb(const TermOrder& ord) const;
  // Installs a basis known to be the reduced GB of this ideal.
  void install_gb(GBPtr<K> gb) const;

  // I + <extra>; reuses the cached GB as generators when available.
  Ideal plus(const std::vector<Poly<K>>& extra) const;
  Ideal operator+(const Ideal& o) const { return plus(o.generators()); }

  bool contains(const Poly<K>& f) const { return reduced_gb()->contains(f); }
  bool contains(const Ideal& o) const;
  bool operator==(const Ideal& o) const;

  std::string to_string() const { return reduced_gb()->to_string(); }

 private:
  struct Cache {
    std::mutex mu;
    std::map<TermOrder, GBPtr<K>> gbs;
  };

  RingPtr<K> ring_;
  std::vector<Poly<K>> gens_;
  std::size_t known_gb_ = 0;  // gens_ starts with the reduced GB for ring_'s order
  std::shared_ptr<Cache> cache_;
};

/// B = T^n \ LT(I) in increasing order, with a lookup table.
struct QuotientBasis {
  std::vector<PowerProduct> terms;
  std::unordered_map<PowerProduct, std::size_t, PowerProductHash> index;

  std::size_t size() const { return terms.size(); }
  int find(const PowerProduct& t) const {
    auto it = index.find(t);
    return it == index.end() ? -1 : static_cast<int>(it->second);
  }
};

// Throws NotZeroDimensional. The unit ideal has an empty basis.
template <class K>
QuotientBasis quotient_basis(const ReducedGB<K>& gb);

// lcm of the denominators of the reduced GB. Throws ZeroIdeal.
BigInt den_sigma(const Ideal<Rationals>& I, const TermOrder& ord);
inline BigInt den_sigma(const Ideal<Rationals>& I) { return den_sigma(I, I.ring()->order()); }

// The ideal generated by pi_p(G) over F_p, with pi_p(G) installed as its
// reduced GB. Throws UglyPrime when p divides den_sigma.
Ideal<PrimeField> reduce_ideal_mod_p(const Ideal<Rationals>& I, const TermOrder& ord,
                                     std::uint32_t p);

// I ∩ K[remaining variables], in a ring over the remaining variables that keeps
// the ordering kind of I's ring.
template <class K>
Ideal<K> eliminate(const Ideal<K>& I, const std::vector<std::size_t>& vars);

template <class K>
Ideal<K> intersect(const Ideal<K>& I, const Ideal<K>& J);

}  // namespace zdk
