#include "zdk/arith.hpp"

#include <algorithm>
#include <stdexcept>

#include "zdk/errors.hpp"

namespace zdk {

BigInt crt_combine(const BigInt& r1, const BigInt& m1, const BigInt& r2, const BigInt& m2) {
  BigInt g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
  if (g != 1) throw NonCoprimeModuli();
  // x = r1 + m1 * ((r2 - r1) * s mod m2), where s*m1 = 1 mod m2
  BigInt k = (r2 - r1) * s;
  mpz_fdiv_r(k.get_mpz_t(), k.get_mpz_t(), m2.get_mpz_t());
  BigInt x = r1 + m1 * k;
  BigInt m = m1 * m2;
  mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return x;
}

Rat Reconstruction::value() const {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

namespace {

Reconstruction make_candidate(const BigInt& a, const BigInt& t) {
  Reconstruction out;
  BigInt g = gcd(a, t);
  out.num = a / g;
  out.den = t / g;
  if (out.den < 0) {
    out.num = -out.num;
    out.den = -out.den;
  }
  return out;
}

}  // namespace

Reconstruction rat_reconstruct(const BigInt& r_in, const BigInt& M, unsigned slack_bits) {
  BigInt r = r_in;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), M.get_mpz_t());
  if (r == 0) return {BigInt(0), BigInt(1), true};

  BigInt bound = M >> slack_bits;  // |a|*|b| must not exceed this
  BigInt r_prev = M, r_cur = r;
  BigInt t_prev = 0, t_cur = 1;
  BigInt best_q = 0;
  Reconstruction best{BigInt(r), BigInt(1), false};
  BigInt q, tmp;
  while (r_cur != 0) {
    mpz_fdiv_q(q.get_mpz_t(), r_prev.get_mpz_t(), r_cur.get_mpz_t());
    BigInt t_abs = abs(t_cur);
    if (r_cur * t_abs <= bound) {
      Reconstruction out = make_candidate(r_cur, t_cur);
      out.reliable = mpz_sizeinbase(q.get_mpz_t(), 2) > slack_bits && gcd(out.den, M) == 1;
      return out;
    }
    if (q > best_q) {
      best_q = q;
      best = make_candidate(r_cur, t_cur);
    }
    tmp = r_prev - q * r_cur;
    r_prev = r_cur;
    r_cur = tmp;
    tmp = t_prev - q * t_cur;
    t_prev = t_cur;
    t_cur = tmp;
  }
  best.reliable = false;
  return best;
}

BigInt int_radical(const BigInt& n_in) {
  if (n_in <= 0) throw std::invalid_argument("int_radical needs a positive integer");
  BigInt n = n_in;
  BigInt rad = 1;
  if (mpz_even_p(n.get_mpz_t())) {
    rad *= 2;
    while (mpz_even_p(n.get_mpz_t())) n /= 2;
  }
  for (BigInt d = 3; d * d <= n; d += 2) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      rad *= d;
      while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) n /= d;
    }
  }
  if (n > 1) rad *= n;
  return rad;
}

bool rad_divides(const BigInt& a_in, const BigInt& b) {
  BigInt a = abs(a_in);
  if (a == 0) return b == 0;
  if (b == 0) return true;
  for (;;) {
    if (a == 1) return true;
    BigInt g = gcd(a, b);
    if (g == 1) return false;
    while (mpz_divisible_p(a.get_mpz_t(), g.get_mpz_t())) a /= g;
  }
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic witness set for 64-bit integers
  for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("element is not invertible");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

std::uint32_t rat_mod_p(const Rat& q, std::uint32_t p) {
  unsigned long den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den == 0) throw UglyPrime(p);
  unsigned long num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  return static_cast<std::uint32_t>(mul_mod(num, inv_mod_u64(den, p), p));
}

PrimeStream::PrimeStream(std::uint64_t seed, std::vector<std::uint32_t> forced)
    : rng_(seed), forced_(std::move(forced)) {}

std::uint32_t PrimeStream::next() {
  while (forced_pos_ < forced_.size()) {
    std::uint32_t p = forced_[forced_pos_++];
    if (used_.insert(p).second) return p;
  }
  std::uniform_int_distribution<std::uint32_t> dist(1U << 29, (1U << 30) - 1);
  for (;;) {
    std::uint32_t c = dist(rng_) | 1U;
    if (is_prime_u64(c) && used_.insert(c).second) return c;
  }
}

CrtAccumulator::CrtAccumulator(int degree, const std::vector<std::uint32_t>& coeffs, std::uint32_t p)
    : degree_(degree), modulus_(p), primes_{p} {
  if (static_cast<int>(coeffs.size()) != degree + 1)
    throw std::invalid_argument("residue vector length does not match degree");
  residues_.reserve(coeffs.size());
  for (auto c : coeffs) residues_.emplace_back(c);
}

void CrtAccumulator::absorb(const std::vector<std::uint32_t>& coeffs, std::uint32_t p) {
  if (empty()) {
    *this = CrtAccumulator(static_cast<int>(coeffs.size()) - 1, coeffs, p);
    return;
  }
  if (static_cast<int>(coeffs.size()) != degree_ + 1)
    throw std::invalid_argument("degree class mismatch in CRT accumulation");
  unsigned long m_mod_p = mpz_fdiv_ui(modulus_.get_mpz_t(), p);
  if (m_mod_p == 0) throw NonCoprimeModuli();
  std::uint64_t m_inv = inv_mod_u64(m_mod_p, p);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    // x = r + M*k with k = (c - r) / M mod p
    std::uint64_t r_mod_p = mpz_fdiv_ui(residues_[i].get_mpz_t(), p);
    std::uint64_t diff = (coeffs[i] + static_cast<std::uint64_t>(p) - r_mod_p) % p;
    std::uint64_t k = mul_mod(diff, m_inv, p);
    if (k != 0) mpz_addmul_ui(residues_[i].get_mpz_t(), modulus_.get_mpz_t(), k);
  }
  modulus_ *= p;
  primes_.push_back(p);
}

}  // namespace zdk
