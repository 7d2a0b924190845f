#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zdk/arith.hpp"
#include "zdk/groebner.hpp"
#include "zdk/unipoly.hpp"

namespace zdk {

enum class PrimeClass { Usable, Ugly };

// Ugly iff p divides den(f) * den_sigma(I).
PrimeClass classify_prime(std::uint32_t p, const Poly<Rationals>& f, const Ideal<Rationals>& I,
                          const TermOrder& ord);

struct ModularOptions {
  bool verify = true;
  std::uint64_t seed = 0;
  // Tried first, in this order, before the seeded stream.
  std::vector<std::uint32_t> forced_primes;
  // Upper bound on the number of primes drawn (ugly ones included).
  std::size_t max_primes = 2000;
};

enum class Verification { Passed, Skipped, Unverified };

struct ModularReport {
  std::vector<std::uint32_t> primes_used;  // usable primes with an image computed
  std::vector<std::uint32_t> ugly_primes;
  std::vector<std::pair<std::uint32_t, int>> bad_primes;  // (p, deg mu_p)
  std::vector<std::uint32_t> crt_primes;                  // primes in the final class
  std::size_t modulus_bits = 0;
  int reconstructions = 0;
  int failed_verifications = 0;
  Verification verification = Verification::Skipped;
  bool early_exit = false;
  bool full_degree_certified = false;

  std::string to_string() const;
};

struct ModularResult {
  UPoly<Rationals> mu;
  ModularReport report;
};

// Multi-modular minimal polynomial over Q. Throws NotZeroDimensional, and
// HeuristicExhausted when max_primes primes are drawn without an accepted result.
ModularResult minpoly_modular(const Ideal<Rationals>& I, const Poly<Rationals>& f,
                              const TermOrder& ord, const ModularOptions& opts = {});

// No Groebner basis over Q: images come from the generators reduced mod p, and
// the result is never checked. Returns the best reconstruction available when
// max_primes runs out.
ModularResult minpoly_modular_heuristic(const std::vector<Poly<Rationals>>& gens,
                                        const Poly<Rationals>& f, const TermOrder& ord,
                                        const ModularOptions& opts = {});

}  // namespace zdk
