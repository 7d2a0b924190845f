#include "zdk/poly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "zdk/errors.hpp"

namespace zdk {

template <class K>
PolyRing<K>::PolyRing(K field, std::vector<std::string> vars, TermOrder order)
    : field_(std::move(field)), vars_(std::move(vars)), order_(order) {
  if (vars_.size() > kMaxVars) throw std::invalid_argument("at most 16 variables are supported");
  std::set<std::string> seen(vars_.begin(), vars_.end());
  if (seen.size() != vars_.size()) throw std::invalid_argument("duplicate variable name");
  if (order_.arity() != vars_.size()) throw ArityMismatch();
}

template <class K>
int PolyRing<K>::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

template <class K>
std::shared_ptr<const PolyRing<K>> PolyRing<K>::with_order(const TermOrder& order) const {
  return std::make_shared<const PolyRing<K>>(field_, vars_, order);
}

std::string format_power_product(const PowerProduct& t, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (t[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (t[i] > 1) out += "^" + std::to_string(t[i]);
  }
  return out;
}

template <class K>
Poly<K>::Poly(RingPtr<K> ring, std::vector<TermT> terms) : ring_(std::move(ring)) {
  const TermOrder& ord = ring_->order();
  const K& F = ring_->field();
  std::sort(terms.begin(), terms.end(),
            [&](const TermT& a, const TermT& b) { return ord.cmp(a.pp, b.pp) > 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().pp == t.pp) {
      F.add_to(terms_.back().c, t.c);
    } else {
      if (!terms_.empty() && F.is_zero(terms_.back().c)) terms_.pop_back();
      terms_.push_back(std::move(t));
    }
  }
  if (!terms_.empty() && F.is_zero(terms_.back().c)) terms_.pop_back();
}

template <class K>
Poly<K> Poly<K>::from_sorted(RingPtr<K> ring, std::vector<TermT> terms) {
  Poly r(std::move(ring));
  r.terms_ = std::move(terms);
  return r;
}

template <class K>
Poly<K> Poly<K>::constant(RingPtr<K> ring, const Elem& c) {
  Poly r(ring);
  if (!ring->field().is_zero(c)) r.terms_.push_back({PowerProduct(ring->nvars()), c});
  return r;
}

template <class K>
Poly<K> Poly<K>::from_int(RingPtr<K> ring, long long c) {
  auto e = ring->field().from_int(c);
  return constant(std::move(ring), e);
}

template <class K>
Poly<K> Poly<K>::var(RingPtr<K> ring, std::size_t i) {
  auto one = ring->field().one();
  auto t = PowerProduct::variable(ring->nvars(), i);
  return monomial(std::move(ring), t, one);
}

template <class K>
Poly<K> Poly<K>::monomial(RingPtr<K> ring, const PowerProduct& t, const Elem& c) {
  if (t.arity() != ring->nvars()) throw ArityMismatch();
  Poly r(ring);
  if (!ring->field().is_zero(c)) r.terms_.push_back({t, c});
  return r;
}

template <class K>
unsigned Poly<K>::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.pp.degree());
  return d;
}

template <class K>
typename Poly<K>::Elem Poly<K>::constant_coeff() const {
  if (!terms_.empty() && terms_.back().pp.is_one()) return terms_.back().c;
  return field().zero();
}

template <class K>
typename Poly<K>::Elem Poly<K>::coeff(const PowerProduct& t) const {
  for (const auto& term : terms_)
    if (term.pp == t) return term.c;
  return field().zero();
}

template <class K>
Poly<K> Poly<K>::operator+(const Poly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  const TermOrder& ord = ring_->order();
  const K& F = field();
  std::vector<TermT> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ord.cmp(terms_[i].pp, o.terms_[j].pp);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Elem s = F.add(terms_[i].c, o.terms_[j].c);
      if (!F.is_zero(s)) out.push_back({terms_[i].pp, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  return from_sorted(ring_, std::move(out));
}

template <class K>
Poly<K> Poly<K>::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.c = field().neg(t.c);
  return r;
}

template <class K>
Poly<K> Poly<K>::operator-(const Poly& o) const {
  return *this + (-o);
}

template <class K>
Poly<K> Poly<K>::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(ring_);
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].pp, o.terms_[0].c);
  if (terms_.size() == 1) return o.mul_term(terms_[0].pp, terms_[0].c);
  const K& F = field();
  std::unordered_map<PowerProduct, Elem, PowerProductHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      auto [it, fresh] = acc.try_emplace(a.pp * b.pp, F.zero());
      F.add_mul(it->second, a.c, b.c);
    }
  }
  std::vector<TermT> out;
  out.reserve(acc.size());
  for (auto& [pp, c] : acc)
    if (!F.is_zero(c)) out.push_back({pp, std::move(c)});
  const TermOrder& ord = ring_->order();
  std::sort(out.begin(), out.end(),
            [&](const TermT& a, const TermT& b) { return ord.cmp(a.pp, b.pp) > 0; });
  return from_sorted(ring_, std::move(out));
}

template <class K>
Poly<K> Poly<K>::scale(const Elem& s) const {
  const K& F = field();
  if (F.is_zero(s)) return Poly(ring_);
  Poly r = *this;
  for (auto& t : r.terms_) F.mul_to(t.c, s);
  return r;
}

template <class K>
Poly<K> Poly<K>::mul_term(const PowerProduct& t, const Elem& c) const {
  const K& F = field();
  if (F.is_zero(c)) return Poly(ring_);
  Poly r = *this;
  for (auto& term : r.terms_) {
    term.pp = term.pp * t;
    F.mul_to(term.c, c);
  }
  return r;
}

template <class K>
Poly<K> Poly<K>::monic() const {
  if (is_zero()) throw ZeroPolynomial();
  if (field().is_one(lead_coeff())) return *this;
  return scale(field().inv(lead_coeff()));
}

template <class K>
Poly<K> Poly<K>::pow(unsigned e) const {
  Poly r = from_int(ring_, 1);
  Poly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

template <class K>
Poly<K> Poly<K>::in_ring(const RingPtr<K>& target) const {
  if (!(target->field() == field())) throw FieldMismatch();
  std::uint32_t used = 0;
  for (const auto& t : terms_) used |= t.pp.support_mask();
  std::vector<std::size_t> map(ring_->nvars());
  for (std::size_t i = 0; i < map.size(); ++i) {
    int j = target->var_index(ring_->vars()[i]);
    if (j < 0 && (used >> i & 1))
      throw std::invalid_argument("variable " + ring_->vars()[i] + " missing in target ring");
    map[i] = static_cast<std::size_t>(j);
  }
  std::vector<TermT> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    PowerProduct pp(target->nvars());
    for (std::size_t i = 0; i < map.size(); ++i)
      if (t.pp[i]) pp.set(map[i], t.pp[i]);
    out.push_back({pp, t.c});
  }
  return Poly(target, std::move(out));
}

template <class K>
std::string Poly<K>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_)
    append_term(out, field(), t.c, format_power_product(t.pp, ring_->vars()));
  return out;
}

template <class K>
Poly<K> subst_univariate(const UPoly<K>& mu, const Poly<K>& f) {
  if (!(mu.field() == f.field())) throw FieldMismatch();
  Poly<K> acc(f.ring());
  const auto& c = mu.coeffs();
  for (std::size_t i = c.size(); i-- > 0;)
    acc = acc * f + Poly<K>::constant(f.ring(), c[i]);
  return acc;
}

BigInt den_poly(const Poly<Rationals>& f) {
  BigInt d = 1;
  for (const auto& t : f.terms()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), t.c.get_den_mpz_t());
  return d;
}

RingPtr<PrimeField> ring_mod_p(const RingPtr<Rationals>& ring, std::uint32_t p) {
  return make_ring(PrimeField(p), ring->vars(), ring->order());
}

Poly<PrimeField> map_mod_p(const Poly<Rationals>& f, const RingPtr<PrimeField>& target) {
  if (target->nvars() != f.ring()->nvars()) throw ArityMismatch();
  const PrimeField& F = target->field();
  std::vector<Term<PrimeField>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    auto c = F.from_rat(t.c);
    if (c) out.push_back({t.pp, c});
  }
  if (target->order() == f.ring()->order())
    return Poly<PrimeField>::from_sorted(target, std::move(out));
  return Poly<PrimeField>(target, std::move(out));
}

UPoly<PrimeField> map_mod_p(const UPoly<Rationals>& f, std::uint32_t p) {
  PrimeField F(p);
  std::vector<std::uint32_t> c;
  c.reserve(f.coeffs().size());
  for (const auto& q : f.coeffs()) c.push_back(F.from_rat(q));
  return UPoly<PrimeField>(F, std::move(c));
}

template class PolyRing<Rationals>;
template class PolyRing<PrimeField>;
template class Poly<Rationals>;
template class Poly<PrimeField>;
template Poly<Rationals> subst_univariate(const UPoly<Rationals>&, const Poly<Rationals>&);
template Poly<PrimeField> subst_univariate(const UPoly<PrimeField>&, const Poly<PrimeField>&);

}  // namespace zdk
