#include "zdk/modular.hpp"

#include <map>
#include <optional>
#include <sstream>

#include "zdk/errors.hpp"
#include "zdk/minpoly.hpp"
#include "zdk/quotient.hpp"

namespace zdk {

namespace {

BigInt gb_denominator(const ReducedGB<Rationals>& gb) {
  BigInt den = 1;
  for (const auto& g : gb.elements()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), den_poly(g).get_mpz_t());
  return den;
}

std::vector<std::uint32_t> coeff_vector(const UPoly<PrimeField>& mu) {
  return std::vector<std::uint32_t>(mu.coeffs().begin(), mu.coeffs().end());
}

// Reconstructs every coefficient of the class; `hint` remembers which one
// failed last time so hopeless attempts stop after a single reconstruction.
std::optional<UPoly<Rationals>> reconstruct(const CrtAccumulator& acc, std::size_t& hint) {
  const auto& res = acc.residues();
  std::vector<Rat> coeffs(res.size());
  std::vector<bool> done(res.size(), false);
  if (hint < res.size()) {
    Reconstruction r = rat_reconstruct(res[hint], acc.modulus());
    if (!r.reliable) return std::nullopt;
    coeffs[hint] = r.value();
    done[hint] = true;
  }
  for (std::size_t i = 0; i < res.size(); ++i) {
    if (done[i]) continue;
    Reconstruction r = rat_reconstruct(res[i], acc.modulus());
    if (!r.reliable) {
      hint = i;
      return std::nullopt;
    }
    coeffs[i] = r.value();
  }
  return UPoly<Rationals>(Rationals{}, std::move(coeffs));
}

// Best effort: unreliable coefficients are kept as reconstructed.
UPoly<Rationals> reconstruct_anyway(const CrtAccumulator& acc) {
  std::vector<Rat> coeffs;
  for (const auto& r : acc.residues()) coeffs.push_back(rat_reconstruct(r, acc.modulus()).value());
  return UPoly<Rationals>(Rationals{}, std::move(coeffs));
}

// Multiplication-by-f matrix of P/I scaled to integers: f acts as A / den.
struct ScaledMulMatrix {
  std::vector<std::vector<std::pair<std::size_t, BigInt>>> cols;
  BigInt den = 1;
};

ScaledMulMatrix scaled_mul_matrix(QuotientAlgebra<Rationals>& A, const Poly<Rationals>& f) {
  Poly<Rationals> fn = A.gb()->normal_form(f);
  std::vector<QuotientAlgebra<Rationals>::Vec> cols;
  ScaledMulMatrix m;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    cols.push_back(A.mul(fn, A.unit(i)));
    for (const auto& c : cols.back())
      mpz_lcm(m.den.get_mpz_t(), m.den.get_mpz_t(), c.get_den_mpz_t());
  }
  m.cols.resize(A.dim());
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t k = 0; k < cols[i].size(); ++k) {
      const Rat& c = cols[i][k];
      if (sgn(c) == 0) continue;
      BigInt v = m.den / c.get_den();
      v *= c.get_num();
      m.cols[i].emplace_back(k, std::move(v));
    }
  return m;
}

// mu(f) == 0 in P/I. Horner on D^j * w_j keeps everything integral, which
// avoids the gcds of rational arithmetic on large coefficients.
bool vanishes(const ScaledMulMatrix& m, const UPoly<Rationals>& mu) {
  const auto& c = mu.coeffs();
  std::size_t n = m.cols.size();
  if (c.empty() || n == 0) return true;
  BigInt L = 1;
  for (const auto& q : c) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), q.get_den_mpz_t());
  auto scaled = [&](std::size_t i) { return BigInt(L / c[i].get_den() * c[i].get_num()); };
  std::vector<BigInt> u(n, 0), next(n);
  u[0] = scaled(c.size() - 1);
  BigInt Dk = 1;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    for (auto& x : next) x = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(u[j]) == 0) continue;
      for (const auto& [k, a] : m.cols[j]) mpz_addmul(next[k].get_mpz_t(), a.get_mpz_t(), u[j].get_mpz_t());
    }
    u.swap(next);
    Dk *= m.den;
    mpz_addmul(u[0].get_mpz_t(), Dk.get_mpz_t(), scaled(i).get_mpz_t());
  }
  for (const auto& x : u)
    if (sgn(x) != 0) return false;
  return true;
}

std::size_t bits(const BigInt& n) { return mpz_sizeinbase(n.get_mpz_t(), 2); }

}  // namespace

PrimeClass classify_prime(std::uint32_t p, const Poly<Rationals>& f, const Ideal<Rationals>& I,
                          const TermOrder& ord) {
  BigInt den = gb_denominator(*I.reduced_gb(ord)) * den_poly(f);
  return den % p == 0 ? PrimeClass::Ugly : PrimeClass::Usable;
}

std::string ModularReport::to_string() const {
  std::ostringstream os;
  os << "primes: " << primes_used.size() << "\n";
  os << "ugly primes: " << ugly_primes.size() << "\n";
  os << "bad primes:";
  if (bad_primes.empty()) os << " none";
  for (const auto& [p, d] : bad_primes) os << " " << p << "(deg " << d << ")";
  os << "\n";
  os << "crt primes: " << crt_primes.size() << "\n";
  os << "modulus bits: " << modulus_bits << "\n";
  os << "verification: "
     << (verification == Verification::Passed    ? "passed"
         : verification == Verification::Skipped ? "skipped"
                                                  : "unverified")
     << "\n";
  os << "full-degree certificate: " << (full_degree_certified ? "yes" : "no") << "\n";
  os << "early exit: " << (early_exit ? "yes" : "no") << "\n";
  return os.str();
}

ModularResult minpoly_modular(const Ideal<Rationals>& I, const Poly<Rationals>& f_in,
                              const TermOrder& ord, const ModularOptions& opts) {
  GBPtr<Rationals> gb = I.reduced_gb(ord);
  std::size_t d = quotient_basis(*gb).size();
  ModularResult out{UPoly<Rationals>::constant(Rationals{}, Rat(1)), {}};
  if (d == 0) return out;

  Poly<Rationals> f = adopt(gb->ring(), f_in);
  BigInt den = gb_denominator(*gb) * den_poly(f);
  ModularReport& rep = out.report;
  std::optional<ScaledMulMatrix> M;  // built on first verification

  PrimeStream stream(opts.seed, opts.forced_primes);
  CrtAccumulator acc;
  std::size_t hint = 0;
  for (std::size_t drawn = 0; drawn < opts.max_primes; ++drawn) {
    std::uint32_t p = stream.next();
    if (den % p == 0) {
      rep.ugly_primes.push_back(p);
      continue;
    }
    Ideal<PrimeField> Ip = reduce_ideal_mod_p(I, ord, p);
    QuotientAlgebra<PrimeField> A(Ip.reduced_gb(ord));
    UPoly<PrimeField> mu_p = minpoly_in(A, map_mod_p(f, A.ring()));
    rep.primes_used.push_back(p);
    int deg = mu_p.degree();

    if (acc.empty()) {
      acc = CrtAccumulator(deg, coeff_vector(mu_p), p);
    } else if (deg < acc.degree()) {
      rep.bad_primes.emplace_back(p, deg);
      continue;
    } else if (deg > acc.degree()) {
      for (auto q : acc.primes()) rep.bad_primes.emplace_back(q, acc.degree());
      acc = CrtAccumulator(deg, coeff_vector(mu_p), p);
      hint = 0;
    } else {
      acc.absorb(coeff_vector(mu_p), p);
    }

    bool full = static_cast<std::size_t>(deg) == d;
    if (acc.primes().size() < 2 && !full) continue;
    ++rep.reconstructions;
    auto mu = reconstruct(acc, hint);
    if (!mu) continue;
    if (opts.verify) {
      if (!M) {
        QuotientAlgebra<Rationals> AQ(gb);
        M = scaled_mul_matrix(AQ, f);
      }
      if (!vanishes(*M, *mu)) {
        ++rep.failed_verifications;
        continue;
      }
      rep.verification = Verification::Passed;
    } else {
      rep.verification = Verification::Unverified;
    }
    rep.full_degree_certified = full;
    rep.early_exit = full && acc.primes().size() == 1;
    rep.crt_primes = acc.primes();
    rep.modulus_bits = bits(acc.modulus());
    out.mu = std::move(*mu);
    return out;
  }
  throw HeuristicExhausted(static_cast<int>(opts.max_primes), "accepted modular image");
}

ModularResult minpoly_modular_heuristic(const std::vector<Poly<Rationals>>& gens,
                                        const Poly<Rationals>& f_in, const TermOrder& ord,
                                        const ModularOptions& opts) {
  if (!f_in.ring()) throw std::invalid_argument("polynomial without a ring");
  auto rq = f_in.ring()->with_order(ord);
  Poly<Rationals> f = adopt(rq, f_in);
  BigInt den = den_poly(f);
  std::vector<Poly<Rationals>> G;
  for (const auto& g : gens) {
    G.push_back(adopt(rq, g));
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), den_poly(G.back()).get_mpz_t());
  }

  ModularResult out{UPoly<Rationals>(Rationals{}), {}};
  ModularReport& rep = out.report;
  rep.verification = Verification::Unverified;
  std::map<int, CrtAccumulator> classes;
  PrimeStream stream(opts.seed, opts.forced_primes);
  std::size_t hint = 0;

  auto finish = [&](UPoly<Rationals> mu) {
    const CrtAccumulator& top = classes.rbegin()->second;
    for (const auto& [deg, acc] : classes)
      if (deg != top.degree())
        for (auto q : acc.primes()) rep.bad_primes.emplace_back(q, deg);
    rep.crt_primes = top.primes();
    rep.modulus_bits = bits(top.modulus());
    out.mu = std::move(mu);
    return out;
  };

  for (std::size_t drawn = 0; drawn < opts.max_primes; ++drawn) {
    std::uint32_t p = stream.next();
    if (den % p == 0) {
      rep.ugly_primes.push_back(p);
      continue;
    }
    auto rp = ring_mod_p(rq, p);
    std::vector<Poly<PrimeField>> gp;
    for (const auto& g : G) gp.push_back(map_mod_p(g, rp));
    Ideal<PrimeField> Ip(rp, gp);
    std::optional<QuotientAlgebra<PrimeField>> A;
    try {
      A.emplace(Ip.reduced_gb());
    } catch (const NotZeroDimensional&) {
      rep.bad_primes.emplace_back(p, -1);
      continue;
    }
    UPoly<PrimeField> mu_p = minpoly_in(*A, map_mod_p(f, rp));
    rep.primes_used.push_back(p);
    int deg = mu_p.degree();
    auto it = classes.find(deg);
    if (it == classes.end()) {
      classes.emplace(deg, CrtAccumulator(deg, coeff_vector(mu_p), p));
    } else {
      it->second.absorb(coeff_vector(mu_p), p);
    }
    const CrtAccumulator& top = classes.rbegin()->second;
    if (top.degree() != deg || top.primes().size() < 2) continue;
    ++rep.reconstructions;
    if (auto mu = reconstruct(top, hint)) return finish(std::move(*mu));
  }
  if (classes.empty()) throw HeuristicExhausted(static_cast<int>(opts.max_primes), "accepted modular image");
  return finish(reconstruct_anyway(classes.rbegin()->second));
}

}  // namespace zdk
