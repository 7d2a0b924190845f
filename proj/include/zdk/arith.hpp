#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace zdk {

using BigInt = mpz_class;
// mpq_class keeps gcd(num, den) = 1 and den > 0 after canonicalize().
using Rat = mpq_class;

// Slack (in bits) demanded by rat_reconstruct before it calls a result reliable.
inline constexpr unsigned kReconstructionSlackBits = 20;

// Unique x in [0, m1*m2) with x = r1 mod m1 and x = r2 mod m2.
// Throws NonCoprimeModuli when gcd(m1, m2) != 1.
BigInt crt_combine(const BigInt& r1, const BigInt& m1, const BigInt& r2, const BigInt& m2);

struct Reconstruction {
  BigInt num;
  BigInt den{1};
  bool reliable = false;

  Rat value() const;
};

/// Fault-tolerant rational reconstruction of a residue r modulo M.
///
/// Walks the extended Euclidean remainder sequence of (M, r). The first pair
/// (a_i, b_i) with |a_i|*|b_i| <= M / 2^20 is the candidate; it is reliable when
/// the quotient following it has at least 20 bits and the reduced denominator is
/// a unit modulo M. Common factors of a_i and b_i are cancelled, which lets a
/// single corrupted prime of the modulus be absorbed once M has grown enough.
/// When no pair qualifies, the pair with the largest quotient jump is returned
/// with reliable = false.
Reconstruction rat_reconstruct(const BigInt& r, const BigInt& M,
                               unsigned slack_bits = kReconstructionSlackBits);

// Product of the distinct primes dividing n (trial division).
BigInt int_radical(const BigInt& n);

// Rad(a) | Rad(b), i.e. every prime factor of a divides b. No factoring needed.
bool rad_divides(const BigInt& a, const BigInt& b);

bool is_prime_u64(std::uint64_t n);

std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t p);

// Reduction of a rational into Z/p. Throws UglyPrime if p divides the denominator.
std::uint32_t rat_mod_p(const Rat& q, std::uint32_t p);

/// Deterministic stream of distinct word-sized primes in [2^29, 2^30),
/// optionally preceded by a fixed list of primes.
class PrimeStream {
 public:
  explicit PrimeStream(std::uint64_t seed, std::vector<std::uint32_t> forced = {});

  std::uint32_t next();

 private:
  std::mt19937_64 rng_;
  std::vector<std::uint32_t> forced_;
  std::size_t forced_pos_ = 0;
  std::set<std::uint32_t> used_;
};

/// Residue vectors combined by CRT for one degree class. Entry i of residues()
/// is the i-th coefficient modulo modulus(); all vectors have length degree + 1.
class CrtAccumulator {
 public:
  CrtAccumulator() = default;
  CrtAccumulator(int degree, const std::vector<std::uint32_t>& coeffs, std::uint32_t p);

  int degree() const { return degree_; }
  bool empty() const { return primes_.empty(); }
  const BigInt& modulus() const { return modulus_; }
  const std::vector<BigInt>& residues() const { return residues_; }
  const std::vector<std::uint32_t>& primes() const { return primes_; }

  // Throws std::invalid_argument on a degree mismatch and NonCoprimeModuli on a
  // repeated prime.
  void absorb(const std::vector<std::uint32_t>& coeffs, std::uint32_t p);

 private:
  int degree_ = -1;
  BigInt modulus_{1};
  std::vector<BigInt> residues_;
  std::vector<std::uint32_t> primes_;
};

}  // namespace zdk
