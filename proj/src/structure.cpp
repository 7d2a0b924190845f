#include "zdk/structure.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <optional>
#include <random>
#include <type_traits>

#include "zdk/errors.hpp"
#include "zdk/lindep.hpp"
#include "zdk/minpoly.hpp"
#include "zdk/modular.hpp"
#include "zdk/quotient.hpp"

namespace zdk {

namespace {

Factorization<PrimeField> factorize(const UPoly<PrimeField>& f) { return factor_uni_fp(f); }
Factorization<Rationals> factorize(const UPoly<Rationals>& f) { return factor_uni_q(f); }

template <class K>
bool reducible(const Factorization<K>& fz) {
  return !(fz.distinct() == 1 && fz.factors[0].second == 1);
}

template <class K>
bool squarefree(const UPoly<K>& mu) {
  return mu.degree() < 1 || sqfree_uni(mu).degree() == mu.degree();
}

template <class K>
std::vector<UPoly<K>> factor_powers(const Factorization<K>& fz) {
  std::vector<UPoly<K>> out;
  for (const auto& [g, m] : fz.factors) out.push_back(g.pow(static_cast<unsigned>(m)));
  return out;
}

template <class K>
std::size_t dim_of(const Ideal<K>& I, const TermOrder& ord) {
  return quotient_basis(*I.reduced_gb(ord)).size();
}

// Minimal polynomials of elements of one quotient ring.
template <class K>
class MinPolys;

template <>
class MinPolys<PrimeField> {
 public:
  MinPolys(const Ideal<PrimeField>& I, const TermOrder& ord) : A_(I.reduced_gb(ord)) {}
  std::size_t dim() const { return A_.dim(); }
  UPoly<PrimeField> operator()(const Poly<PrimeField>& f) { return minpoly_in(A_, f); }

 private:
  QuotientAlgebra<PrimeField> A_;
};

template <>
class MinPolys<Rationals> {
 public:
  MinPolys(const Ideal<Rationals>& I, const TermOrder& ord) : I_(I), ord_(ord), d_(dim_of(I, ord)) {}
  std::size_t dim() const { return d_; }
  UPoly<Rationals> operator()(const Poly<Rationals>& f) { return minpoly_modular(I_, f, ord_).mu; }

 private:
  Ideal<Rationals> I_;
  TermOrder ord_;
  std::size_t d_;
};

// Coefficients uniform in [-999, 999] \ {0} on every variable.
Poly<Rationals> random_linear_form(const RingPtr<Rationals>& r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-999, 998);
  Poly<Rationals> l(r);
  for (std::size_t i = 0; i < r->nvars(); ++i) {
    int c = dist(rng);
    if (c >= 0) ++c;
    l += Poly<Rationals>::var(r, i).scale(Rat(c));
  }
  return l;
}

template <class K>
Poly<K> var(const Ideal<K>& I, std::size_t i) {
  return Poly<K>::var(I.ring(), i);
}

template <class K>
UPoly<K> z_poly(const K& F) {
  return UPoly<K>::x(F);
}

// ---------------------------------------------------------------- F_p linear algebra

using Vec32 = std::vector<std::uint32_t>;

struct SparseCols {
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> cols;  // (row, value)
  std::size_t nnz = 0;
};

// Number of products of residues that fit in a 64-bit accumulator.
std::uint64_t lazy_budget(std::uint32_t p) {
  std::uint64_t q = static_cast<std::uint64_t>(p - 1) * (p - 1);
  return q == 0 ? std::numeric_limits<std::uint64_t>::max() : std::numeric_limits<std::uint64_t>::max() / q - 1;
}

Vec32 sparse_apply(const SparseCols& M, const Vec32& v, std::uint32_t p) {
  std::vector<std::uint64_t> acc(v.size(), 0);
  std::uint64_t budget = lazy_budget(p), used = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (++used >= budget) {
      for (auto& a : acc) a %= p;
      used = 1;
    }
    for (const auto& [r, c] : M.cols[i]) acc[r] += static_cast<std::uint64_t>(c) * v[i];
  }
  Vec32 out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<std::uint32_t>(acc[i] % p);
  return out;
}

// Row-major d x d.
struct Dense {
  std::size_t d = 0;
  Vec32 a;

  Vec32 apply(const Vec32& v, std::uint32_t p) const {
    Vec32 out(d);
    std::uint64_t budget = lazy_budget(p);
    for (std::size_t i = 0; i < d; ++i) {
      std::uint64_t acc = 0, used = 0;
      const std::uint32_t* row = &a[i * d];
      for (std::size_t k = 0; k < d; ++k) {
        acc += static_cast<std::uint64_t>(row[k]) * v[k];
        if (++used >= budget) {
          acc %= p;
          used = 1;
        }
      }
      out[i] = static_cast<std::uint32_t>(acc % p);
    }
    return out;
  }
};

Dense dense_mul(const Dense& A, const Dense& B, std::uint32_t p) {
  std::size_t d = A.d;
  Dense C{d, Vec32(d * d)};
  std::uint64_t budget = lazy_budget(p);
  std::vector<std::uint64_t> acc(d);
  for (std::size_t i = 0; i < d; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    std::uint64_t used = 0;
    for (std::size_t k = 0; k < d; ++k) {
      std::uint64_t x = A.a[i * d + k];
      if (x == 0) continue;
      if (++used >= budget) {
        for (auto& c : acc) c %= p;
        used = 1;
      }
      const std::uint32_t* row = &B.a[k * d];
      for (std::size_t j = 0; j < d; ++j) acc[j] += x * row[j];
    }
    for (std::size_t j = 0; j < d; ++j) C.a[i * d + j] = static_cast<std::uint32_t>(acc[j] % p);
  }
  return C;
}

Dense dense_pow(const SparseCols& M, std::size_t d, std::uint32_t e, std::uint32_t p) {
  Dense base{d, Vec32(d * d)};
  for (std::size_t j = 0; j < d; ++j)
    for (const auto& [r, c] : M.cols[j]) base.a[r * d + j] = c;
  Dense acc{d, Vec32(d * d)};
  for (std::size_t i = 0; i < d; ++i) acc.a[i * d + i] = 1;
  bool first = true;
  while (e) {
    if (e & 1) {
      acc = first ? base : dense_mul(acc, base, p);
      first = false;
    }
    e >>= 1;
    if (e) base = dense_mul(base, base, p);
  }
  return acc;
}

// ---------------------------------------------------------------- splitting helpers

template <class K>
SplitReport<K> primary_certificate(const Ideal<K>& I) {
  SplitReport<K> r;
  r.splitter = Poly<K>(I.ring());
  r.factor_powers = {z_poly(I.field())};
  r.token = SplitToken::TotalSplit;
  return r;
}

template <class K>
bool is_maximal_impl(const Ideal<K>& I, const TermOrder& ord, const StructureOptions& opts, int& forms) {
  GBPtr<K> gb = I.reduced_gb(ord);
  if (gb->is_unit_ideal() || !gb->is_zero_dimensional()) return false;
  MinPolys<K> mp(I, ord);
  std::size_t d = mp.dim();
  // First Loop
  for (std::size_t i = 0; i < I.ring()->nvars(); ++i) {
    UPoly<K> mu = mp(var(I, i));
    if (reducible(factorize(mu))) return false;
    if (static_cast<std::size_t>(mu.degree()) == d) return true;
  }
  if constexpr (std::is_same_v<K, PrimeField>) {
    return frobenius_basis(I, ord).dim() == 1;
  } else {
    // Second Loop
    std::mt19937_64 rng(opts.seed);
    for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
      ++forms;
      UPoly<K> mu = mp(random_linear_form(I.ring(), rng));
      if (reducible(factorize(mu))) return false;
      if (static_cast<std::size_t>(mu.degree()) == d) return true;
    }
    throw HeuristicExhausted(opts.max_attempts);
  }
}

SplitReport<Rationals> pd_splitting_infinite_impl(const Ideal<Rationals>& I, const TermOrder& ord,
                                                  const StructureOptions& opts) {
  MinPolys<Rationals> mp(I, ord);
  std::size_t d = mp.dim();
  std::mt19937_64 rng(opts.seed);
  SplitReport<Rationals> r;
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    ++r.random_forms;
    Poly<Rationals> l = random_linear_form(I.ring(), rng);
    UPoly<Rationals> mu = mp(l);
    auto fz = factorize(mu);
    if (static_cast<std::size_t>(mu.degree()) == d || fz.distinct() > 1) {
      r.splitter = l;
      r.factor_powers = factor_powers(fz);
      r.token = static_cast<std::size_t>(mu.degree()) == d ? SplitToken::TotalSplit : SplitToken::PartialSplit;
      return r;
    }
  }
  throw HeuristicExhausted(opts.max_attempts);
}

template <class K>
void decompose(const Ideal<K>& I, const TermOrder& ord, const StructureOptions& opts,
               std::vector<Ideal<K>>& out) {
  CoreDecomposition<K> core = primary_decomposition_core(I, ord, opts);
  if (core.token == SplitToken::TotalSplit) {
    out.insert(out.end(), core.components.begin(), core.components.end());
    return;
  }
  for (const auto& J : core.components) {
    if (is_primary_0dim(J, ord, opts)) {
      out.push_back(J);
    } else {
      decompose(J, ord, opts, out);
    }
  }
}

}  // namespace

template <class K>
bool is_radical_0dim(const Ideal<K>& I, const TermOrder& ord) {
  MinPolys<K> mp(I, ord);
  std::size_t d = mp.dim();
  if (d == 0) return true;
  for (std::size_t i = 0; i < I.ring()->nvars(); ++i) {
    UPoly<K> mu = mp(var(I, i));
    if (!squarefree(mu)) return false;
    if (static_cast<std::size_t>(mu.degree()) == d) return true;
  }
  return true;
}

template <class K>
Ideal<K> radical_0dim(const Ideal<K>& I, const TermOrder& ord) {
  Ideal<K> J = I;
  auto mp = std::make_unique<MinPolys<K>>(J, ord);
  std::size_t d = mp->dim();
  if (d == 0) return J;
  for (std::size_t i = 0; i < I.ring()->nvars(); ++i) {
    Poly<K> x = var(I, i);
    UPoly<K> mu = (*mp)(x);
    if (!squarefree(mu)) {
      mu = sqfree_uni(mu);
      J = J.plus({subst_univariate(mu, x)});
      mp = std::make_unique<MinPolys<K>>(J, ord);
      d = mp->dim();
    }
    if (static_cast<std::size_t>(mu.degree()) == d) return J;
  }
  return J;
}

FrobeniusBasis<PrimeField> frobenius_basis(const Ideal<PrimeField>& I, const TermOrder& ord) {
  QuotientAlgebra<PrimeField> A(I.reduced_gb(ord));
  const PrimeField& F = A.field();
  std::uint32_t p = F.modulus();
  std::size_t d = A.dim();
  std::size_t n = I.ring()->nvars();
  FrobeniusBasis<PrimeField> out;
  if (d == 0) return out;

  // multiplication by each variable, as sparse columns
  std::vector<SparseCols> M(n);
  for (std::size_t j = 0; j < n; ++j) {
    M[j].cols.resize(d);
    PowerProduct xj = PowerProduct::variable(n, j);
    for (std::size_t i = 0; i < d; ++i) {
      const auto& v = A.term_coords(A.basis().terms[i] * xj);
      for (std::size_t r = 0; r < d; ++r)
        if (v[r]) M[j].cols[i].emplace_back(static_cast<std::uint32_t>(r), v[r]);
      M[j].nnz += M[j].cols[i].size();
    }
  }

  // phi(t_i) = phi(x_j) * phi(t_k) for t_i = x_j * t_k; multiplication by
  // phi(x_j) = x_j^p is M_j^p, applied either as p sparse products or as a
  // dense matrix power, whichever is estimated cheaper.
  std::vector<std::size_t> step_var(d, 0), step_from(d, 0);
  std::vector<std::size_t> uses(n, 0);
  for (std::size_t i = 1; i < d; ++i) {
    const PowerProduct& t = A.basis().terms[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (t[j] == 0) continue;
      step_var[i] = j;
      step_from[i] = static_cast<std::size_t>(A.basis().find(PowerProduct::variable(n, j).quotient_into(t)));
      break;
    }
    ++uses[step_var[i]];
  }
  std::size_t pbits = 0;
  for (std::uint32_t e = p; e; e >>= 1) ++pbits;
  std::vector<std::unique_ptr<Dense>> power(n);
  for (std::size_t j = 0; j < n; ++j) {
    double sparse_cost = static_cast<double>(uses[j]) * p * static_cast<double>(M[j].nnz);
    double dense_cost = 2.0 * static_cast<double>(pbits) * static_cast<double>(d) * d * d +
                        static_cast<double>(uses[j]) * d * d;
    if (uses[j] && dense_cost < sparse_cost) power[j] = std::make_unique<Dense>(dense_pow(M[j], d, p, p));
  }

  std::vector<Vec32> phi(d);
  phi[0] = A.unit(0);
  for (std::size_t i = 1; i < d; ++i) {
    std::size_t j = step_var[i];
    if (power[j]) {
      phi[i] = power[j]->apply(phi[step_from[i]], p);
    } else {
      Vec32 v = phi[step_from[i]];
      for (std::uint32_t k = 0; k < p; ++k) v = sparse_apply(M[j], v, p);
      phi[i] = std::move(v);
    }
  }

  // kernel of phi - id: one vector per dependent column
  LinDepMill<PrimeField> mill(F, d);
  std::vector<std::size_t> absorbed;
  for (std::size_t i = 0; i < d; ++i) {
    Vec32 col = phi[i];
    col[i] = F.sub(col[i], F.one());
    auto combo = mill.feed(col);
    if (!combo) {
      absorbed.push_back(i);
      continue;
    }
    Vec32 k = A.zero();
    k[i] = F.one();
    for (std::size_t c = 0; c < combo->size(); ++c) k[absorbed[c]] = F.sub(k[absorbed[c]], (*combo)[c]);
    out.elements.push_back(adopt(I.ring(), A.to_poly(k)));
  }
  return out;
}

template <class K>
bool is_maximal(const Ideal<K>& I, const TermOrder& ord, const StructureOptions& opts) {
  int forms = 0;
  return is_maximal_impl(I, ord, opts, forms);
}

template <class K>
bool is_primary_0dim(const Ideal<K>& I, const TermOrder& ord, const StructureOptions& opts) {
  Ideal<K> J = I;
  auto mp = std::make_unique<MinPolys<K>>(J, ord);
  std::size_t d = mp->dim();
  if (d == 0) return false;
  // First Loop
  for (std::size_t i = 0; i < I.ring()->nvars(); ++i) {
    Poly<K> x = var(I, i);
    UPoly<K> mu = (*mp)(x);
    auto fz = factorize(mu);
    if (fz.distinct() != 1) return false;
    if (static_cast<std::size_t>(mu.degree()) == d) return true;
    if (!squarefree(mu)) {
      mu = fz.factors[0].first;
      J = J.plus({subst_univariate(mu, x)});
      mp = std::make_unique<MinPolys<K>>(J, ord);
      d = mp->dim();
      if (static_cast<std::size_t>(mu.degree()) == d) return true;
    }
  }
  if constexpr (std::is_same_v<K, PrimeField>) {
    return frobenius_basis(I, ord).dim() == 1;
  } else {
    // Second Loop, on the radical J
    std::mt19937_64 rng(opts.seed);
    for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
      UPoly<K> mu = (*mp)(random_linear_form(I.ring(), rng));
      if (reducible(factorize(mu))) return false;
      if (static_cast<std::size_t>(mu.degree()) == d) return true;
    }
    throw HeuristicExhausted(opts.max_attempts);
  }
}

template <class K>
SplitReport<K> pd_splitting(const Ideal<K>& I, const TermOrder& ord, const StructureOptions& opts) {
  MinPolys<K> mp(I, ord);
  std::size_t d = mp.dim();
  if (d == 0) {
    SplitReport<K> r;
    r.splitter = Poly<K>(I.ring());
    return r;
  }
  std::vector<Poly<K>> sq;
  // First Loop
  for (std::size_t i = 0; i < I.ring()->nvars(); ++i) {
    Poly<K> x = var(I, i);
    UPoly<K> mu = mp(x);
    auto fz = factorize(mu);
    bool full = static_cast<std::size_t>(mu.degree()) == d;
    if (full || fz.distinct() > 1) {
      SplitReport<K> r;
      r.splitter = x;
      r.factor_powers = factor_powers(fz);
      r.token = full ? SplitToken::TotalSplit : SplitToken::PartialSplit;
      return r;
    }
    sq.push_back(subst_univariate(fz.factors[0].first, x));
  }
  if constexpr (std::is_same_v<K, PrimeField>) {
    return pd_splitting_finite(I, ord);
  } else {
    int forms = 0;
    if (is_maximal_impl(I.plus(sq), ord, opts, forms)) {
      SplitReport<K> r = primary_certificate(I);
      r.random_forms = forms;
      return r;
    }
    SplitReport<K> r = pd_splitting_infinite_impl(I, ord, opts);
    r.random_forms += forms;
    return r;
  }
}

SplitReport<PrimeField> pd_splitting_finite(const Ideal<PrimeField>& I, const TermOrder& ord) {
  FrobeniusBasis<PrimeField> fb = frobenius_basis(I, ord);
  std::size_t s = fb.dim();
  if (s == 0) {
    SplitReport<PrimeField> r;
    r.splitter = Poly<PrimeField>(I.ring());
    return r;
  }
  if (s == 1) return primary_certificate(I);
  const Poly<PrimeField>* f = nullptr;
  for (const auto& b : fb.elements) {
    if (!b.is_constant()) {
      f = &b;
      break;
    }
  }
  MinPolys<PrimeField> mp(I, ord);
  UPoly<PrimeField> mu = mp(*f);
  SplitReport<PrimeField> r;
  r.splitter = *f;
  r.factor_powers = factor_powers(factorize(mu));
  r.token = static_cast<std::size_t>(mu.degree()) == s ? SplitToken::TotalSplit : SplitToken::PartialSplit;
  return r;
}

SplitReport<Rationals> pd_splitting_infinite(const Ideal<Rationals>& I, const TermOrder& ord,
                                             const StructureOptions& opts) {
  return pd_splitting_infinite_impl(I, ord, opts);
}

namespace {

// Solves M c = b for every right-hand side column of rows (d x (d + m)) in
// place; false when M is singular.
bool solve_mod_p(std::vector<std::vector<std::uint32_t>>& rows, std::size_t d, const PrimeField& F) {
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = c;
    while (piv < d && rows[piv][c] == 0) ++piv;
    if (piv == d) return false;
    std::swap(rows[piv], rows[c]);
    auto inv = F.inv(rows[c][c]);
    for (auto& x : rows[c]) x = F.mul(x, inv);
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || rows[r][c] == 0) continue;
      auto m = rows[r][c];
      for (std::size_t k = c; k < rows[r].size(); ++k)
        if (rows[c][k]) rows[r][k] = F.sub(rows[r][k], F.mul(m, rows[c][k]));
    }
  }
  return true;
}

// When f generates P/I, x_i = r_i(f) mod I and the component for the factor g
// is <g(f), x_i - (r_i mod g)(f)>. The remainders are found modulo primes and
// reconstructed. A candidate is accepted only if it contains I and has
// dimension deg g, which forces it to equal I + <g(f)>. This replaces one
// Buchberger run over Q per component.
std::optional<std::vector<Ideal<Rationals>>> shape_components(const Ideal<Rationals>& I, const TermOrder& ord,
                                                              const Poly<Rationals>& f_in,
                                                              const std::vector<UPoly<Rationals>>& gs,
                                                              std::uint64_t seed) {
  constexpr std::size_t kMaxPrimes = 64;
  GBPtr<Rationals> gb = I.reduced_gb(ord);
  const RingPtr<Rationals>& ring = gb->ring();
  std::size_t d = quotient_basis(*gb).size();
  std::size_t n = ring->nvars();
  Poly<Rationals> f = adopt(ring, f_in);

  BigInt den = den_poly(f);
  for (const auto& g : gb->elements()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), den_poly(g).get_mpz_t());
  for (const auto& g : gs)
    for (const auto& c : g.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());

  PrimeStream stream(seed);
  CrtAccumulator acc;
  for (std::size_t drawn = 0; drawn < kMaxPrimes; ++drawn) {
    std::uint32_t p = stream.next();
    if (den % p == 0) continue;
    Ideal<PrimeField> Ip = reduce_ideal_mod_p(I, ord, p);
    QuotientAlgebra<PrimeField> A(Ip.reduced_gb(ord));
    if (A.dim() != d) continue;
    const PrimeField& F = A.field();
    Poly<PrimeField> fp = A.gb()->normal_form(map_mod_p(f, A.ring()));

    // columns: f^0 .. f^{d-1}, then x_1 .. x_n
    std::vector<std::vector<std::uint32_t>> rows(d, std::vector<std::uint32_t>(d + n));
    auto v = A.unit(0);
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t r = 0; r < d; ++r) rows[r][k] = v[r];
      if (k + 1 < d) v = A.mul(fp, v);
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto c = A.coords(Poly<PrimeField>::var(A.ring(), i));
      for (std::size_t r = 0; r < d; ++r) rows[r][d + i] = c[r];
    }
    if (!solve_mod_p(rows, d, F)) continue;

    std::vector<std::uint32_t> res;
    for (const auto& g : gs) {
      UPoly<PrimeField> gp = map_mod_p(g, p);
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::uint32_t> ri(d);
        for (std::size_t k = 0; k < d; ++k) ri[k] = rows[k][d + i];
        UPoly<PrimeField> s = UPoly<PrimeField>(F, std::move(ri)) % gp;
        for (int k = 0; k < g.degree(); ++k) res.push_back(s.coeff(static_cast<std::size_t>(k)));
      }
    }
    if (acc.empty())
      acc = CrtAccumulator(static_cast<int>(res.size()) - 1, res, p);
    else
      acc.absorb(res, p);

    std::vector<Rat> vals;
    bool reliable = true;
    for (const auto& r : acc.residues()) {
      Reconstruction rc = rat_reconstruct(r, acc.modulus());
      if (!rc.reliable) {
        reliable = false;
        break;
      }
      vals.push_back(rc.value());
    }
    if (!reliable) continue;

    std::vector<Ideal<Rationals>> out;
    std::size_t pos = 0;
    for (const auto& g : gs) {
      std::vector<Poly<Rationals>> gens{subst_univariate(g, f)};
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rat> sc(vals.begin() + static_cast<std::ptrdiff_t>(pos),
                            vals.begin() + static_cast<std::ptrdiff_t>(pos) + g.degree());
        pos += static_cast<std::size_t>(g.degree());
        UPoly<Rationals> s(Rationals{}, std::move(sc));
        gens.push_back(Poly<Rationals>::var(ring, i) - subst_univariate(s, f));
      }
      Ideal<Rationals> J(I.ring(), std::move(gens));
      GBPtr<Rationals> gbJ = J.reduced_gb(ord);
      if (quotient_basis(*gbJ).size() != static_cast<std::size_t>(g.degree())) break;
      bool contains = true;
      for (const auto& e : gb->elements())
        if (!(contains = gbJ->contains(e))) break;
      if (!contains) break;
      out.push_back(std::move(J));
    }
    if (out.size() == gs.size()) return out;
  }
  return std::nullopt;
}

}  // namespace

template <class K>
CoreDecomposition<K> primary_decomposition_core(const Ideal<K>& I, const TermOrder& ord,
                                                const StructureOptions& opts) {
  SplitReport<K> rep = pd_splitting(I, ord, opts);
  CoreDecomposition<K> out;
  out.token = rep.token;
  if (rep.s() == 0) return out;
  if (rep.s() == 1) {
    out.components = {I};
    out.token = SplitToken::TotalSplit;
    return out;
  }
  if constexpr (std::is_same_v<K, Rationals>) {
    int total = 0;
    for (const auto& g : rep.factor_powers) total += g.degree();
    if (static_cast<std::size_t>(total) == dim_of(I, ord)) {
      if (auto comps = shape_components(I, ord, rep.splitter, rep.factor_powers, opts.seed)) {
        out.components = std::move(*comps);
        return out;
      }
    }
  }
  // mu_j(f)^{d_j} is added in normal form
  QuotientAlgebra<K> A(I.reduced_gb(ord));
  Poly<K> f = A.gb()->normal_form(rep.splitter);
  for (const auto& g : rep.factor_powers) out.components.push_back(I.plus({adopt(I.ring(), A.to_poly(A.eval(g, f)))}));
  return out;
}

template <class K>
std::vector<Ideal<K>> primary_decomposition_0dim(const Ideal<K>& I, const TermOrder& ord,
                                                 const StructureOptions& opts) {
  std::vector<Ideal<K>> out;
  decompose(I, ord, opts, out);
  std::vector<std::pair<std::string, std::size_t>> keys;
  for (std::size_t i = 0; i < out.size(); ++i) keys.emplace_back(out[i].reduced_gb(ord)->to_string(), i);
  std::sort(keys.begin(), keys.end());
  std::vector<Ideal<K>> sorted;
  for (const auto& [k, i] : keys) sorted.push_back(out[i]);
  return sorted;
}

#define ZDK_INSTANTIATE(K)                                                                               \
  template bool is_radical_0dim(const Ideal<K>&, const TermOrder&);                                      \
  template Ideal<K> radical_0dim(const Ideal<K>&, const TermOrder&);                                     \
  template bool is_maximal(const Ideal<K>&, const TermOrder&, const StructureOptions&);                  \
  template bool is_primary_0dim(const Ideal<K>&, const TermOrder&, const StructureOptions&);             \
  template SplitReport<K> pd_splitting(const Ideal<K>&, const TermOrder&, const StructureOptions&);      \
  template CoreDecomposition<K> primary_decomposition_core(const Ideal<K>&, const TermOrder&,            \
                                                           const StructureOptions&);                     \
  template std::vector<Ideal<K>> primary_decomposition_0dim(const Ideal<K>&, const TermOrder&,           \
                                                            const StructureOptions&);

ZDK_INSTANTIATE(Rationals)
ZDK_INSTANTIATE(PrimeField)

}  // namespace zdk
