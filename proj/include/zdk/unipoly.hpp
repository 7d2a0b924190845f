#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zdk/errors.hpp"
#include "zdk/field.hpp"

namespace zdk {

// Appends one "c*m" term to a canonical polynomial string.
template <class K>
void append_term(std::string& out, const K& field, const typename K::Elem& c,
                 const std::string& monomial) {
  std::string cs = field.to_string(c);
  bool negative = field.is_negative(c);
  if (negative) cs.erase(0, 1);
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (monomial.empty()) {
    out += cs;
  } else {
    if (cs != "1") out += cs;
    out += monomial;
  }
}

/// Dense univariate polynomial; coeffs()[i] is the coefficient of z^i.
/// The coefficient vector never ends in a zero.
template <class K>
class UPoly {
 public:
  using Elem = typename K::Elem;

  explicit UPoly(K field) : field_(std::move(field)) {}
  UPoly(K field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    trim();
  }

  static UPoly constant(const K& field, const Elem& c) { return UPoly(field, {c}); }
  static UPoly monomial(const K& field, const Elem& c, std::size_t deg) {
    std::vector<Elem> v(deg + 1, field.zero());
    v[deg] = c;
    return UPoly(field, std::move(v));
  }
  static UPoly x(const K& field) { return monomial(field, field.one(), 1); }

  const K& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && field_.is_one(c_.back()); }
  const std::vector<Elem>& coeffs() const { return c_; }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  const Elem& lead() const { return c_.back(); }

  UPoly operator+(const UPoly& o) const {
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) field_.add_to(r[i], o.c_[i]);
    return UPoly(field_, std::move(r));
  }
  UPoly operator-() const {
    std::vector<Elem> r(c_.size(), field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = field_.neg(c_[i]);
    return UPoly(field_, std::move(r));
  }
  UPoly operator-(const UPoly& o) const { return *this + (-o); }
  UPoly operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly(field_);
    std::vector<Elem> r(c_.size() + o.c_.size() - 1, field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (field_.is_zero(c_[i])) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) field_.add_mul(r[i + j], c_[i], o.c_[j]);
    }
    return UPoly(field_, std::move(r));
  }
  UPoly scale(const Elem& s) const {
    std::vector<Elem> r(c_.size(), field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = field_.mul(c_[i], s);
    return UPoly(field_, std::move(r));
  }
  UPoly monic() const {
    if (is_zero()) throw ZeroPolynomial();
    return scale(field_.inv(lead()));
  }
  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly(field_);
    std::vector<Elem> r(c_.size() - 1, field_.zero());
    for (std::size_t i = 1; i < c_.size(); ++i)
      r[i - 1] = field_.mul(c_[i], field_.from_int(static_cast<long long>(i)));
    return UPoly(field_, std::move(r));
  }

  // Euclidean division; throws ZeroPolynomial when dividing by zero.
  std::pair<UPoly, UPoly> divrem(const UPoly& d) const {
    if (d.is_zero()) throw ZeroPolynomial();
    if (degree() < d.degree()) return {UPoly(field_), *this};
    std::vector<Elem> rem = c_;
    std::vector<Elem> q(c_.size() - d.c_.size() + 1, field_.zero());
    Elem inv_lead = field_.inv(d.lead());
    bool monic_divisor = field_.is_one(d.lead());
    std::size_t dd = d.c_.size() - 1;
    for (std::size_t k = q.size(); k-- > 0;) {
      Elem c = rem[k + dd];
      if (field_.is_zero(c)) continue;
      if (!monic_divisor) c = field_.mul(c, inv_lead);
      q[k] = c;
      for (std::size_t j = 0; j <= dd; ++j) field_.sub_mul(rem[k + j], c, d.c_[j]);
    }
    rem.resize(dd);
    return {UPoly(field_, std::move(q)), UPoly(field_, std::move(rem))};
  }
  UPoly operator/(const UPoly& d) const { return divrem(d).first; }
  UPoly operator%(const UPoly& d) const { return divrem(d).second; }

  UPoly pow(unsigned e) const {
    UPoly r = constant(field_, field_.one());
    UPoly b = *this;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  Elem eval(const Elem& x) const {
    Elem acc = field_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) {
      field_.mul_to(acc, x);
      field_.add_to(acc, c_[i]);
    }
    return acc;
  }

  bool operator==(const UPoly& o) const { return c_ == o.c_; }

  std::string to_string(const std::string& var = "z") const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (field_.is_zero(c_[i])) continue;
      std::string m;
      if (i == 1) m = var;
      if (i > 1) m = var + "^" + std::to_string(i);
      append_term(out, field_, c_[i], m);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  K field_;
  std::vector<Elem> c_;
};

// Monic gcd (zero if both inputs are zero).
template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
  while (!b.is_zero()) {
    UPoly<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

// Multi-modular with trial division; the Euclidean remainders over Q blow up.
UPoly<Rationals> gcd(UPoly<Rationals> a, UPoly<Rationals> b);

// (g, s, t) with g = s*a + t*b monic.
template <class K>
struct ExtGcd {
  UPoly<K> g, s, t;
};

template <class K>
ExtGcd<K> ext_gcd(const UPoly<K>& a, const UPoly<K>& b) {
  const K& F = a.field();
  UPoly<K> r0 = a, r1 = b;
  UPoly<K> s0 = UPoly<K>::constant(F, F.one()), s1(F);
  UPoly<K> t0(F), t1 = UPoly<K>::constant(F, F.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divrem(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly<K> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UPoly<K> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  auto li = F.inv(r0.lead());
  return {r0.scale(li), s0.scale(li), t0.scale(li)};
}

// base^e mod m.
template <class K>
UPoly<K> powmod(UPoly<K> base, const BigInt& e_in, const UPoly<K>& m) {
  const K& F = base.field();
  UPoly<K> r = UPoly<K>::constant(F, F.one()) % m;
  base = base % m;
  std::size_t bits = mpz_sizeinbase(e_in.get_mpz_t(), 2);
  if (e_in == 0) return r;
  for (std::size_t i = bits; i-- > 0;) {
    r = (r * r) % m;
    if (mpz_tstbit(e_in.get_mpz_t(), i)) r = (r * base) % m;
  }
  return r;
}

namespace detail {

// Coefficient p-th root of g(z^p) over a prime field: identity on coefficients.
template <class K>
UPoly<K> pth_root(const UPoly<K>& f) {
  std::size_t p = static_cast<std::size_t>(f.field().characteristic());
  std::vector<typename K::Elem> r;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) r.push_back(f.coeffs()[i]);
  return UPoly<K>(f.field(), std::move(r));
}

}  // namespace detail

/// Square-free part: the monic product of the distinct irreducible factors.
/// Throws ZeroPolynomial / ConstantPolynomial.
template <class K>
UPoly<K> sqfree_uni(const UPoly<K>& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  if (f.degree() < 1) throw ConstantPolynomial();
  const K& F = f.field();
  UPoly<K> g = f.monic();
  UPoly<K> d = g.derivative();
  if (F.characteristic() == 0) return g / gcd(g, d);
  if (d.is_zero()) return sqfree_uni(detail::pth_root(g));
  UPoly<K> c = gcd(g, d);
  UPoly<K> s = g / c;  // factors whose multiplicity is prime to p
  // strip every factor of s from c; what is left is a p-th power
  for (UPoly<K> h = gcd(c, s); h.degree() > 0; h = gcd(c, s)) c = c / h;
  if (c.degree() < 1) return s;
  return (s * sqfree_uni(detail::pth_root(c))).monic();
}

/// Square-free decomposition f = lc * prod_i a_i^i with the a_i square-free and
/// pairwise coprime. Returns the non-constant (a_i, i) pairs.
template <class K>
std::vector<std::pair<UPoly<K>, int>> squarefree_decomposition(const UPoly<K>& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  const K& F = f.field();
  std::vector<std::pair<UPoly<K>, int>> out;
  if (f.degree() < 1) return out;
  UPoly<K> g = f.monic();
  std::uint64_t p = F.characteristic();
  UPoly<K> d = g.derivative();
  if (d.is_zero()) {
    for (auto& [a, m] : squarefree_decomposition(detail::pth_root(g)))
      out.emplace_back(a, m * static_cast<int>(p));
    return out;
  }
  UPoly<K> c = gcd(g, d);
  UPoly<K> w = g / c;
  int i = 1;
  while (w.degree() > 0) {
    UPoly<K> y = gcd(w, c);
    UPoly<K> z = w / y;
    if (z.degree() > 0) out.emplace_back(z, i);
    w = y;
    c = c / y;
    ++i;
  }
  if (p != 0 && c.degree() > 0) {
    for (auto& [a, m] : squarefree_decomposition(detail::pth_root(c)))
      out.emplace_back(a, m * static_cast<int>(p));
  }
  return out;
}

}  // namespace zdk
