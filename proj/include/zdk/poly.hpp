#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "zdk/field.hpp"
#include "zdk/monomial.hpp"
#include "zdk/unipoly.hpp"

namespace zdk {

/// Coefficient field, variable names and term ordering of a polynomial ring.
template <class K>
class PolyRing {
 public:
  // Throws std::invalid_argument on duplicate names or too many variables.
  PolyRing(K field, std::vector<std::string> vars, TermOrder order);

  const K& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const TermOrder& order() const { return order_; }

  // -1 when the name is not a variable of this ring.
  int var_index(std::string_view name) const;

  std::shared_ptr<const PolyRing> with_order(const TermOrder& order) const;

  // Same field and variables; the ordering may differ.
  bool compatible(const PolyRing& o) const { return field_ == o.field_ && vars_ == o.vars_; }
  bool operator==(const PolyRing& o) const { return compatible(o) && order_ == o.order_; }

 private:
  K field_;
  std::vector<std::string> vars_;
  TermOrder order_;
};

template <class K>
using RingPtr = std::shared_ptr<const PolyRing<K>>;

template <class K>
RingPtr<K> make_ring(K field, std::vector<std::string> vars, TermOrder order) {
  return std::make_shared<const PolyRing<K>>(std::move(field), std::move(vars), order);
}

template <class K>
RingPtr<K> make_ring(K field, std::vector<std::string> vars) {
  std::size_t n = vars.size();
  return make_ring(std::move(field), std::move(vars), TermOrder::degrevlex(n));
}

template <class K>
struct Term {
  PowerProduct pp;
  typename K::Elem c;

  bool operator==(const Term&) const = default;
};

// "x^2*y", or "" for the power product 1.
std::string format_power_product(const PowerProduct& t, const std::vector<std::string>& vars);

/// Sparse polynomial; terms are nonzero and strictly σ-descending.
template <class K>
class Poly {
 public:
  using Elem = typename K::Elem;
  using TermT = Term<K>;

  Poly() = default;
  explicit Poly(RingPtr<K> ring) : ring_(std::move(ring)) {}
  // Sorts, merges equal power products and drops zero coefficients.
  Poly(RingPtr<K> ring, std::vector<TermT> terms);

  // Terms must already be canonical; not checked.
  static Poly from_sorted(RingPtr<K> ring, std::vector<TermT> terms);
  static Poly constant(RingPtr<K> ring, const Elem& c);
  static Poly from_int(RingPtr<K> ring, long long c);
  static Poly var(RingPtr<K> ring, std::size_t i);
  static Poly monomial(RingPtr<K> ring, const PowerProduct& t, const Elem& c);

  const RingPtr<K>& ring() const { return ring_; }
  const K& field() const { return ring_->field(); }
  const std::vector<TermT>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_.front().pp.is_one(); }
  bool is_monic() const { return !terms_.empty() && field().is_one(terms_.front().c); }
  const PowerProduct& lead_pp() const { return terms_.front().pp; }
  const Elem& lead_coeff() const { return terms_.front().c; }
  unsigned total_degree() const;
  Elem constant_coeff() const;
  // Coefficient of t (zero if absent).
  Elem coeff(const PowerProduct& t) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scale(const Elem& s) const;
  Poly mul_term(const PowerProduct& t, const Elem& c) const;
  // Throws ZeroPolynomial.
  Poly monic() const;
  Poly pow(unsigned e) const;

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  // Re-expresses this polynomial in another ring over the same field, matching
  // variables by name. Throws std::invalid_argument if a variable that occurs
  // in this polynomial is missing there.
  Poly in_ring(const RingPtr<K>& target) const;

  std::string to_string() const;

 private:
  RingPtr<K> ring_;
  std::vector<TermT> terms_;
};

// Σ mu_i f^i by Horner's rule.
template <class K>
Poly<K> subst_univariate(const UPoly<K>& mu, const Poly<K>& f);

// lcm of the coefficient denominators; 1 for the zero polynomial.
BigInt den_poly(const Poly<Rationals>& f);

// Same variables and ordering over F_p.
RingPtr<PrimeField> ring_mod_p(const RingPtr<Rationals>& ring, std::uint32_t p);

// Coefficientwise image in `target`. Throws UglyPrime if p divides a denominator.
Poly<PrimeField> map_mod_p(const Poly<Rationals>& f, const RingPtr<PrimeField>& target);
UPoly<PrimeField> map_mod_p(const UPoly<Rationals>& f, std::uint32_t p);

}  // namespace zdk
