#include "zdk/monomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "zdk/errors.hpp"

namespace zdk {

PowerProduct::PowerProduct(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVars) throw std::invalid_argument("too many variables");
}

PowerProduct::PowerProduct(std::size_t nvars, const std::vector<unsigned>& exps)
    : PowerProduct(nvars) {
  if (exps.size() != nvars) throw ArityMismatch();
  for (std::size_t i = 0; i < nvars; ++i) set(i, exps[i]);
}

PowerProduct PowerProduct::variable(std::size_t nvars, std::size_t i, unsigned e) {
  PowerProduct t(nvars);
  t.set(i, e);
  return t;
}

void PowerProduct::set(std::size_t i, unsigned e) {
  if (i >= nvars_) throw std::out_of_range("variable index");
  if (e > 0xFFFF) throw std::overflow_error("exponent too large");
  deg_ = deg_ - exps_[i] + e;
  exps_[i] = static_cast<Exponent>(e);
  if (e)
    mask_ |= static_cast<std::uint16_t>(1U << i);
  else
    mask_ &= static_cast<std::uint16_t>(~(1U << i));
}

PowerProduct PowerProduct::operator*(const PowerProduct& o) const {
  PowerProduct r = *this;
  for (std::size_t i = 0; i < nvars_; ++i) {
    unsigned e = static_cast<unsigned>(exps_[i]) + o.exps_[i];
    if (e > 0xFFFF) throw std::overflow_error("exponent too large");
    r.exps_[i] = static_cast<Exponent>(e);
  }
  r.deg_ = deg_ + o.deg_;
  r.mask_ = mask_ | o.mask_;
  return r;
}

bool PowerProduct::divides(const PowerProduct& o) const {
  if ((mask_ & ~o.mask_) != 0 || deg_ > o.deg_) return false;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exps_[i] > o.exps_[i]) return false;
  return true;
}

PowerProduct PowerProduct::quotient_into(const PowerProduct& o) const {
  PowerProduct r = o;
  for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] = static_cast<Exponent>(o.exps_[i] - exps_[i]);
  r.deg_ = o.deg_ - deg_;
  r.mask_ = 0;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (r.exps_[i]) r.mask_ |= static_cast<std::uint16_t>(1U << i);
  return r;
}

PowerProduct PowerProduct::lcm(const PowerProduct& o) const {
  PowerProduct r = *this;
  r.deg_ = 0;
  for (std::size_t i = 0; i < nvars_; ++i) {
    r.exps_[i] = std::max(exps_[i], o.exps_[i]);
    r.deg_ += r.exps_[i];
  }
  r.mask_ = mask_ | o.mask_;
  return r;
}

bool PowerProduct::coprime(const PowerProduct& o) const { return (mask_ & o.mask_) == 0; }

int PowerProduct::pure_power_var() const {
  if (mask_ == 0 || (mask_ & (mask_ - 1)) != 0) return -1;
  return __builtin_ctz(mask_);
}

std::size_t PowerProduct::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < nvars_; ++i) {
    h ^= exps_[i];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

TermOrder::TermOrder(OrderKind kind, std::size_t nvars, std::size_t block)
    : kind_(kind), nvars_(nvars), block_(block) {
  if (kind == OrderKind::Elimination && block > nvars)
    throw std::invalid_argument("elimination block larger than arity");
  if (kind != OrderKind::Elimination) block_ = 0;
}

namespace {

// degrevlex restricted to variables [lo, hi)
int degrevlex_range(const PowerProduct& a, const PowerProduct& b, std::size_t lo, std::size_t hi) {
  unsigned da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int TermOrder::cmp(const PowerProduct& a, const PowerProduct& b) const {
  switch (kind_) {
    case OrderKind::Lex:
      for (std::size_t i = 0; i < nvars_; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    case OrderKind::DegLex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      for (std::size_t i = 0; i < nvars_; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    case OrderKind::DegRevLex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      for (std::size_t i = nvars_; i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      return 0;
    case OrderKind::Elimination: {
      int c = degrevlex_range(a, b, 0, block_);
      if (c != 0) return c;
      return degrevlex_range(a, b, block_, nvars_);
    }
  }
  return 0;
}

std::strong_ordering TermOrder::compare(const PowerProduct& a, const PowerProduct& b) const {
  if (a.arity() != nvars_ || b.arity() != nvars_) throw ArityMismatch();
  int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string TermOrder::name() const {
  switch (kind_) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::DegLex:
      return "deglex";
    case OrderKind::DegRevLex:
      return "degrevlex";
    case OrderKind::Elimination:
      return "elim(" + std::to_string(block_) + ")";
  }
  return "?";
}

}  // namespace zdk
