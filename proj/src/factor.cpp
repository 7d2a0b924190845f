#include "zdk/factor.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>

#include "zdk/arith.hpp"
#include "zdk/errors.hpp"

namespace zdk {

namespace {

template <class K>
bool coeff_less(const UPoly<K>& a, const UPoly<K>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (ca[i] != cb[i]) return ca[i] < cb[i];
  return false;
}

template <class K>
void canonicalize(std::vector<std::pair<UPoly<K>, int>>& fs) {
  std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) { return coeff_less(a.first, b.first); });
  std::vector<std::pair<UPoly<K>, int>> merged;
  for (auto& f : fs) {
    if (!merged.empty() && merged.back().first == f.first) {
      merged.back().second += f.second;
    } else {
      merged.push_back(std::move(f));
    }
  }
  fs = std::move(merged);
}

// ---------------------------------------------------------------- F_p

using UPF = UPoly<PrimeField>;

// Columns x^{p*j} mod g for j < deg g, so that h^p mod g = sum_j h_j * col_j.
std::vector<UPF> frobenius_columns(const UPF& g) {
  const PrimeField& F = g.field();
  std::size_t n = static_cast<std::size_t>(g.degree());
  std::uint32_t p = F.modulus();
  std::vector<UPF> cols;
  cols.reserve(n);
  cols.push_back(UPF::constant(F, F.one()));
  if (n == 1) return cols;
  UPF xp = powmod(UPF::x(F), BigInt(p), g);
  for (std::size_t j = 1; j < n; ++j) {
    if (p < n) {
      // shifting by p and reducing is cheaper than a full product
      std::vector<std::uint32_t> c(cols.back().coeffs().size() + p, 0);
      std::copy(cols.back().coeffs().begin(), cols.back().coeffs().end(), c.begin() + p);
      cols.push_back(UPF(F, std::move(c)) % g);
    } else {
      cols.push_back((cols.back() * xp) % g);
    }
  }
  return cols;
}

UPF apply_frobenius(const std::vector<UPF>& cols, const UPF& h) {
  const PrimeField& F = h.field();
  std::vector<std::uint32_t> out(cols.size(), 0);
  for (std::size_t j = 0; j < h.coeffs().size(); ++j) {
    std::uint32_t c = h.coeffs()[j];
    if (c == 0) continue;
    const auto& col = cols[j].coeffs();
    for (std::size_t i = 0; i < col.size(); ++i) F.add_mul(out[i], c, col[i]);
  }
  return UPF(F, std::move(out));
}

// d is monic, square-free, and a product of irreducibles of degree i.
void equal_degree(const UPF& d, int i, std::mt19937_64& rng, std::vector<UPF>& out) {
  if (d.degree() == i) {
    out.push_back(d);
    return;
  }
  const PrimeField& F = d.field();
  std::uint32_t p = F.modulus();
  for (;;) {
    std::vector<std::uint32_t> a(static_cast<std::size_t>(d.degree()));
    for (auto& c : a) c = static_cast<std::uint32_t>(rng() % p);
    UPF A(F, std::move(a));
    if (A.degree() < 1) continue;
    UPF b(F);
    if (p == 2) {
      UPF t = A;
      b = A;
      for (int k = 1; k < i; ++k) {
        t = (t * t) % d;
        b = b + t;
      }
    } else {
      BigInt e;
      mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(i));
      e = (e - 1) / 2;
      b = powmod(A, e, d) - UPF::constant(F, F.one());
    }
    UPF c = gcd(d, b);
    if (c.degree() > 0 && c.degree() < d.degree()) {
      equal_degree(c, i, rng, out);
      equal_degree(d / c, i, rng, out);
      return;
    }
  }
}

// Irreducible factors of a monic square-free g.
std::vector<UPF> factor_squarefree_fp(const UPF& g_in) {
  std::vector<UPF> out;
  if (g_in.degree() <= 1) {
    if (g_in.degree() == 1) out.push_back(g_in);
    return out;
  }
  const PrimeField& F = g_in.field();
  std::mt19937_64 rng(0x5eed + F.modulus());
  auto cols = frobenius_columns(g_in);
  UPF x = UPF::x(F);
  UPF h = x;
  UPF g = g_in;
  for (int i = 1; 2 * i <= g.degree(); ++i) {
    h = apply_frobenius(cols, h);  // x^{p^i} mod g_in
    UPF d = gcd(g, h - x);
    if (d.degree() > 0) {
      equal_degree(d, i, rng, out);
      g = g / d;
    }
  }
  if (g.degree() > 0) out.push_back(g.monic());
  return out;
}

// ---------------------------------------------------------------- Z[x]

using ZPoly = std::vector<BigInt>;  // little-endian, no trailing zeros

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ztrim(r);
  return r;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, int sign = 1) {
  ZPoly r(std::max(a.size(), b.size()), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += sign > 0 ? b[i] : BigInt(-b[i]);
  ztrim(r);
  return r;
}

// Coefficients in [0, m).
ZPoly zmod(ZPoly a, const BigInt& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
  return a;
}

// Coefficients in (-m/2, m/2].
ZPoly zmods(ZPoly a, const BigInt& m) {
  BigInt half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  ztrim(a);
  return a;
}

// Division by a polynomial with leading coefficient 1 modulo m.
std::pair<ZPoly, ZPoly> zdivrem_monic(ZPoly a, const ZPoly& b, const BigInt& m) {
  a = zmod(std::move(a), m);
  if (zdeg(a) < zdeg(b)) return {{}, a};
  std::size_t db = b.size() - 1;
  ZPoly q(a.size() - db, BigInt(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    BigInt c = a[k + db];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[k + j] -= c * b[j];
  }
  a.resize(db);
  return {zmod(std::move(q), m), zmod(std::move(a), m)};
}

std::optional<ZPoly> zdiv_exact(ZPoly a, const ZPoly& b) {
  if (zdeg(a) < zdeg(b)) return std::nullopt;
  std::size_t db = b.size() - 1;
  ZPoly q(a.size() - db, BigInt(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    BigInt& top = a[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    BigInt c = top / b.back();
    q[k] = c;
    for (std::size_t j = 0; j <= db; ++j) a[k + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (a[i] != 0) return std::nullopt;
  ztrim(q);
  return q;
}

BigInt zcontent(const ZPoly& a) {
  BigInt g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

// Primitive with positive leading coefficient.
ZPoly zprimitive(ZPoly a) {
  BigInt g = zcontent(a);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

UPF z_to_fp(const ZPoly& a, const PrimeField& F) {
  std::vector<std::uint32_t> c;
  for (const auto& x : a) c.push_back(F.from_bigint(x));
  return UPF(F, std::move(c));
}

ZPoly fp_to_z(const UPF& a) {
  ZPoly r;
  for (auto c : a.coeffs()) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

ZPoly zderivative(const ZPoly& a) {
  ZPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<unsigned long>(i));
  ztrim(r);
  return r;
}

struct Lift {
  ZPoly g, h, s, t;
};

// f = g*h, s*g + t*h = 1 modulo m, h monic  ->  the same modulo m^2.
Lift hensel_step(const ZPoly& f, const Lift& in, const BigInt& m) {
  BigInt M = m * m;
  ZPoly e = zmod(zadd(f, zmul(in.g, in.h), -1), M);
  auto [q, r] = zdivrem_monic(zmul(in.s, e), in.h, M);
  ZPoly g = zmod(zadd(zadd(in.g, zmul(in.t, e)), zmul(q, in.g)), M);
  ZPoly h = zmod(zadd(in.h, r), M);
  ZPoly b = zmod(zadd(zadd(zmul(in.s, g), zmul(in.t, h)), ZPoly{BigInt(1)}, -1), M);
  auto [c, d] = zdivrem_monic(zmul(in.s, b), h, M);
  ZPoly s = zmod(zadd(in.s, d, -1), M);
  ZPoly t = zmod(zadd(zadd(in.t, zmul(in.t, b), -1), zmul(c, g), -1), M);
  return {g, h, s, t};
}

// f = lc(f) * prod fac_i mod p with monic fac_i; returns the fac_i lifted to
// monic factors modulo p^(2^steps).
std::vector<ZPoly> lift_all(const ZPoly& f, const std::vector<UPF>& fac, std::uint32_t p, int steps) {
  BigInt M = p;
  for (int k = 0; k < steps; ++k) M *= M;
  if (fac.size() == 1) {
    BigInt inv;
    BigInt lc = f.back();
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), M.get_mpz_t());
    ZPoly r = f;
    for (auto& c : r) c *= inv;
    return {zmod(std::move(r), M)};
  }
  const PrimeField& F = fac[0].field();
  std::size_t half = fac.size() / 2;
  UPF A = UPF::constant(F, F.from_bigint(f.back()));
  UPF B = UPF::constant(F, F.one());
  for (std::size_t i = 0; i < half; ++i) A = A * fac[i];
  for (std::size_t i = half; i < fac.size(); ++i) B = B * fac[i];
  ExtGcd<PrimeField> eg = ext_gcd(A, B);
  Lift cur{fp_to_z(A), fp_to_z(B), fp_to_z(eg.s), fp_to_z(eg.t)};
  BigInt m = p;
  for (int k = 0; k < steps; ++k) {
    cur = hensel_step(f, cur, m);
    m *= m;
  }
  std::vector<UPF> left(fac.begin(), fac.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<UPF> right(fac.begin() + static_cast<std::ptrdiff_t>(half), fac.end());
  auto out = lift_all(cur.g, left, p, steps);
  auto rest = lift_all(cur.h, right, p, steps);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

// Degrees reachable as sums of subsets of the factor degrees.
std::vector<bool> subset_degrees(const std::vector<UPF>& fac, int n) {
  std::vector<bool> can(static_cast<std::size_t>(n) + 1, false);
  can[0] = true;
  for (const auto& f : fac)
    for (int d = n; d >= f.degree(); --d)
      if (can[static_cast<std::size_t>(d - f.degree())]) can[static_cast<std::size_t>(d)] = true;
  return can;
}

// Irreducible factors over Z of a primitive square-free g with positive lc.
std::vector<ZPoly> factor_squarefree_z(ZPoly g) {
  int n = zdeg(g);
  if (n <= 1) return {g};

  // a dozen small primes: keep the one with fewest factors, intersect degree sets
  std::uint32_t best_p = 0;
  std::vector<UPF> best;
  std::vector<bool> allowed(static_cast<std::size_t>(n) + 1, true);
  int tried = 0;
  ZPoly dg = zderivative(g);
  for (std::uint32_t p = 3; tried < 12 && p < (1u << 20); p += 2) {
    if (!is_prime_u64(p)) continue;
    if (mpz_divisible_ui_p(g.back().get_mpz_t(), p)) continue;
    PrimeField F(p);
    UPF gp = z_to_fp(g, F);
    if (gcd(gp, z_to_fp(dg, F)).degree() > 0) continue;
    ++tried;
    auto fac = factor_squarefree_fp(gp.monic());
    auto can = subset_degrees(fac, n);
    for (std::size_t d = 0; d < allowed.size(); ++d) allowed[d] = allowed[d] && can[d];
    if (best.empty() || fac.size() < best.size()) {
      best = std::move(fac);
      best_p = p;
    }
    if (best.size() == 1) break;
  }
  bool irreducible = best.size() <= 1;
  if (!irreducible) {
    irreducible = true;
    for (int d = 1; d < n; ++d) irreducible = irreducible && !allowed[static_cast<std::size_t>(d)];
  }
  if (irreducible) return {g};

  // coefficient bound for lc(g) * (any factor)
  BigInt norm2 = 0;
  for (const auto& c : g) norm2 += c * c;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  BigInt bound = (root + 1) * abs(g.back());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
  bound *= 2;
  int steps = 0;
  BigInt M = best_p;
  while (M <= bound) {
    M *= M;
    ++steps;
  }
  std::vector<ZPoly> L = lift_all(g, best, best_p, steps);

  std::vector<ZPoly> out;
  std::size_t s = 1;
  while (2 * s <= L.size()) {
    // reach[k][e]: some k of the lifted factors have total degree e
    std::size_t r = L.size();
    std::vector<std::vector<bool>> reach(r + 1, std::vector<bool>(allowed.size(), false));
    reach[0][0] = true;
    for (const auto& f : L) {
      std::size_t fd = static_cast<std::size_t>(zdeg(f));
      for (std::size_t k = r; k-- > 0;)
        for (std::size_t e = allowed.size(); e-- > fd;)
          if (reach[k][e - fd]) reach[k + 1][e] = true;
    }
    while (2 * s <= r) {
      bool any = false;
      for (std::size_t e = 1; e < allowed.size() && !any; ++e) any = reach[s][e] && allowed[e];
      if (any) break;
      ++s;
    }
    if (2 * s > r) break;

    BigInt lc = g.back();
    BigInt g0 = lc * g[0];
    std::vector<std::size_t> idx;
    std::optional<ZPoly> quotient;
    ZPoly found;
    // subsets of size s; at the half size only those holding factor 0
    std::function<bool(std::size_t, int, const BigInt&)> dfs = [&](std::size_t from, int deg,
                                                                 const BigInt& c0) -> bool {
      if (idx.size() == s) {
        if (!allowed[static_cast<std::size_t>(deg)]) return false;
        if (g[0] != 0) {
          ZPoly c0p = zmods({c0}, M);
          BigInt c0s = c0p.empty() ? BigInt(0) : c0p[0];
          if (c0s == 0 || !mpz_divisible_p(g0.get_mpz_t(), c0s.get_mpz_t())) return false;
        }
        ZPoly h{lc};
        for (auto i : idx) h = zmod(zmul(h, L[i]), M);
        h = zprimitive(zmods(std::move(h), M));
        quotient = zdiv_exact(g, h);
        if (!quotient) return false;
        found = std::move(h);
        return true;
      }
      std::size_t last = (2 * s == r && idx.empty()) ? 1 : r - (s - idx.size()) + 1;
      for (std::size_t i = from; i < last; ++i) {
        idx.push_back(i);
        BigInt c = c0 * (L[i].empty() ? BigInt(0) : L[i][0]) % M;
        if (dfs(i + 1, deg + zdeg(L[i]), c)) return true;
        idx.pop_back();
      }
      return false;
    };
    if (!dfs(0, 0, BigInt(lc % M))) {
      ++s;
      continue;
    }
    out.push_back(found);
    g = zprimitive(*quotient);
    std::vector<ZPoly> rest;
    for (std::size_t i = 0, k = 0; i < L.size(); ++i) {
      if (k < idx.size() && idx[k] == i) {
        ++k;
        continue;
      }
      rest.push_back(std::move(L[i]));
    }
    L = std::move(rest);
  }
  if (zdeg(g) > 0) out.push_back(g);
  return out;
}

UPoly<Rationals> z_to_monic_q(const ZPoly& a) {
  std::vector<Rat> c;
  for (const auto& x : a) c.emplace_back(x, a.back());
  for (auto& x : c) x.canonicalize();
  return UPoly<Rationals>(Rationals{}, std::move(c));
}

ZPoly q_to_z(const UPoly<Rationals>& a) {
  BigInt den = 1;
  for (const auto& c : a.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  for (const auto& c : a.coeffs()) z.push_back(BigInt(c * den));
  return zprimitive(std::move(z));
}

}  // namespace

UPoly<Rationals> gcd(UPoly<Rationals> a, UPoly<Rationals> b) {
  Rationals Q;
  if (a.is_zero()) return b.is_zero() ? b : b.monic();
  if (b.is_zero() || a.degree() == 0 || b.degree() == 0)
    return b.is_zero() ? a.monic() : a.degree() == 0 ? UPoly<Rationals>::constant(Q, 1) : gcd(b, a);
  ZPoly A = q_to_z(a), B = q_to_z(b);
  BigInt lcg = gcd(A.back(), B.back());
  int best = std::min(zdeg(A), zdeg(B)) + 1;
  ZPoly acc, prev;
  BigInt M = 1;
  for (std::uint32_t p = 2147483647u;; p -= 2) {
    if (!is_prime_u64(p)) continue;
    if (mpz_divisible_ui_p(A.back().get_mpz_t(), p) || mpz_divisible_ui_p(B.back().get_mpz_t(), p)) continue;
    PrimeField F(p);
    UPF g = gcd(z_to_fp(A, F), z_to_fp(B, F));
    if (g.degree() == 0) return UPoly<Rationals>::constant(Q, 1);
    if (g.degree() > best) continue;  // p divides a resultant
    g = g.scale(F.from_bigint(lcg));
    ZPoly gz = fp_to_z(g);
    gz.resize(static_cast<std::size_t>(g.degree()) + 1);
    if (g.degree() < best) {
      best = g.degree();
      acc = gz;
      M = p;
      prev.clear();
    } else {
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = crt_combine(acc[i], M, gz[i], BigInt(p));
      M *= p;
    }
    ZPoly cand = zmods(acc, M);
    if (cand != prev) {
      prev = cand;
      continue;
    }
    // stable across two primes: try it
    ZPoly h = zprimitive(cand);
    if (zdiv_exact(A, h) && zdiv_exact(B, h)) return z_to_monic_q(h);
  }
}

template <class K>
UPoly<K> Factorization<K>::expand(const K& field) const {
  UPoly<K> r = UPoly<K>::constant(field, unit);
  for (const auto& [f, m] : factors) r = r * f.pow(static_cast<unsigned>(m));
  return r;
}

template struct Factorization<Rationals>;
template struct Factorization<PrimeField>;

Factorization<PrimeField> factor_uni_fp(const UPoly<PrimeField>& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  Factorization<PrimeField> out{f.lead(), {}};
  if (f.degree() < 1) return out;
  for (const auto& [a, m] : squarefree_decomposition(f))
    for (auto& g : factor_squarefree_fp(a.monic())) out.factors.emplace_back(std::move(g), m);
  canonicalize(out.factors);
  return out;
}

Factorization<Rationals> factor_uni_q(const UPoly<Rationals>& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  Factorization<Rationals> out{f.lead(), {}};
  if (f.degree() < 1) return out;
  for (const auto& [a, m] : squarefree_decomposition(f)) {
    for (auto& g : factor_squarefree_z(q_to_z(a))) out.factors.emplace_back(z_to_monic_q(g), m);
  }
  canonicalize(out.factors);
  return out;
}

}  // namespace zdk
