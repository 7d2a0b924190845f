#include <gtest/gtest.h>

#include <random>

#include "zdk/errors.hpp"
#include "zdk/minpoly.hpp"
#include "zdk/modular.hpp"
#include "support.hpp"

using namespace zdk;
using namespace zdk::test_support;

TEST(ClassifyPrime, Examples) {
  auto r = qring({"x", "y"});
  auto I = ideal(r, {"3x^3 - x^2 + 1", "x^2 - y"});
  EXPECT_EQ(classify_prime(2, P(r, "y^3"), I, r->order()), PrimeClass::Usable);
  EXPECT_EQ(classify_prime(3, P(r, "y^3"), I, r->order()), PrimeClass::Ugly);
  EXPECT_EQ(classify_prime(5, P(r, "x/5"), I, r->order()), PrimeClass::Ugly);
  auto M = ideal(r, {"x^2", "y^2"});
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 32003u})
    EXPECT_EQ(classify_prime(p, P(r, "x + y"), M, r->order()), PrimeClass::Usable);
}

TEST(MinPolyModular, BadPrimeTwo) {
  auto r = qring({"x", "y"});
  auto I = ideal(r, {"x^2", "y^2"});
  ModularOptions opts;
  opts.forced_primes = {2};
  auto res = minpoly_modular(I, P(r, "x + y"), r->order(), opts);
  EXPECT_EQ(res.mu.to_string(), "z^3");
  ASSERT_FALSE(res.report.bad_primes.empty());
  EXPECT_EQ(res.report.bad_primes[0], (std::pair<std::uint32_t, int>{2, 2}));
  EXPECT_EQ(res.report.primes_used.front(), 2u);
  EXPECT_EQ(res.report.verification, Verification::Passed);
  for (auto p : res.report.crt_primes) EXPECT_NE(p, 2u);
}

TEST(MinPolyModular, Examples) {
  auto r = qring({"x", "y"});
  auto J = ideal(r, {"x^2 - 2", "y^2 - 3"});
  auto res = minpoly_modular(J, P(r, "x + y"), r->order());
  EXPECT_EQ(res.mu.to_string(), "z^4 - 10z^2 + 1");
  EXPECT_TRUE(res.report.full_degree_certified);

  auto r1 = qring({"x"});
  auto res1 = minpoly_modular(ideal(r1, {"x^2 - 2"}), P(r1, "x"), r1->order());
  EXPECT_EQ(res1.mu.to_string(), "z^2 - 2");
  EXPECT_TRUE(res1.report.early_exit);
  EXPECT_TRUE(res1.report.full_degree_certified);
  EXPECT_EQ(res1.report.primes_used.size(), 1u);

  auto res2 = minpoly_modular(J, P(r, "x/3 + 5/7y"), r->order());
  EXPECT_EQ(res2.mu, minpoly_def(J, P(r, "x/3 + 5/7y"), r->order()));

  EXPECT_THROW(minpoly_modular(ideal(r, {"x^2"}), P(r, "x"), r->order()), NotZeroDimensional);
  EXPECT_EQ(minpoly_modular(ideal(r, {"x", "x - 1"}), P(r, "x"), r->order()).mu.to_string(), "1");
}

TEST(MinPolyModular, Unverified) {
  auto r = qring({"x", "y"});
  auto J = ideal(r, {"x^2 - 2", "y^2 - 3"});
  ModularOptions opts;
  opts.verify = false;
  auto res = minpoly_modular(J, P(r, "x - y"), r->order(), opts);
  EXPECT_EQ(res.mu.to_string(), "z^4 - 10z^2 + 1");
  EXPECT_EQ(res.report.verification, Verification::Unverified);
}

TEST(MinPolyModular, MaxPrimes) {
  auto r = qring({"x", "y"});
  auto I = ideal(r, {"x^2", "y^2"});
  ModularOptions opts;
  opts.forced_primes = {2};
  opts.max_primes = 2;
  EXPECT_THROW(minpoly_modular(I, P(r, "x + y"), r->order(), opts), HeuristicExhausted);
}

TEST(MinPolyModular, SeedDeterminism) {
  auto r = qring({"x", "y"});
  auto J = ideal(r, {"x^2 - 2/3", "y^3 - x*y - 5"});
  ModularOptions opts;
  opts.seed = 77;
  auto a = minpoly_modular(J, P(r, "x + 2y"), r->order(), opts);
  auto b = minpoly_modular(J, P(r, "x + 2y"), r->order(), opts);
  EXPECT_EQ(a.mu, b.mu);
  EXPECT_EQ(a.report.primes_used, b.report.primes_used);
  EXPECT_EQ(a.report.to_string(), b.report.to_string());
  opts.seed = 78;
  auto c = minpoly_modular(J, P(r, "x + 2y"), r->order(), opts);
  EXPECT_EQ(a.mu, c.mu);
  EXPECT_NE(a.report.primes_used, c.report.primes_used);
}

TEST(MinPolyHeuristic, Examples) {
  auto r = qring({"x"});
  std::vector<Poly<Rationals>> gens{P(r, "6x"), P(r, "x^2")};
  ModularOptions opts;
  opts.forced_primes = {5, 7, 11};
  auto good = minpoly_modular_heuristic(gens, P(r, "x"), r->order(), opts);
  EXPECT_EQ(good.mu.to_string(), "z");
  EXPECT_EQ(good.report.verification, Verification::Unverified);

  opts.forced_primes = {2};
  opts.max_primes = 1;
  auto bad = minpoly_modular_heuristic(gens, P(r, "x"), r->order(), opts);
  EXPECT_EQ(bad.mu.to_string(), "z^2");

  auto r2 = qring({"x", "y"});
  auto J = ideal(r2, {"x^2 - 2", "y^2 - 3"});
  auto f = P(r2, "x + y");
  EXPECT_EQ(minpoly_modular_heuristic(J.reduced_gb()->elements(), f, r2->order()).mu,
            minpoly_modular(J, f, r2->order()).mu);
}

TEST(ModularProperties, AgreementAndImages) {
  std::mt19937 rng(41);
  int done = 0;
  while (done < 20) {
    auto r = qring(rng() % 3 ? std::vector<std::string>{"x", "y"}
                             : std::vector<std::string>{"x", "y", "z"});
    Ideal<Rationals> I(r, random_zero_dim(r, rng));
    auto gb = I.reduced_gb();
    std::size_t d = quotient_basis(*gb).size();
    if (d > 15 || d == 0) continue;
    ++done;
    auto f = random_poly(r, rng, 3, 2);
    auto direct = minpoly_def(I, f, r->order());
    auto res = minpoly_modular(I, f, r->order());
    EXPECT_EQ(res.mu, direct);

    // denominators only from den(f) * den_sigma
    BigInt den = 1;
    for (const auto& c : direct.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    EXPECT_TRUE(rad_divides(den, den_poly(f) * den_sigma(I)));

    int usable = 0;
    for (std::uint32_t p : {101u, 103u, 107u, 109u, 113u, 127u, 131u, 137u}) {
      if (usable == 5) break;
      if (classify_prime(p, f, I, r->order()) == PrimeClass::Ugly) continue;
      ++usable;
      auto Ip = reduce_ideal_mod_p(I, r->order(), p);
      auto fp = map_mod_p(f, Ip.ring());
      auto mu_p = minpoly_def(Ip, fp, r->order());
      auto image = map_mod_p(direct, p);
      EXPECT_TRUE((image % mu_p).is_zero());
      EXPECT_EQ(mu_p.degree() == direct.degree(), mu_p == image);

      // powers of f commute with reduction mod p
      QuotientAlgebra<Rationals> AQ(gb);
      QuotientAlgebra<PrimeField> AP(Ip.reduced_gb());
      auto vq = AQ.coords(P(r, "1"));
      auto vp = AP.coords(map_mod_p(P(r, "1"), Ip.ring()));
      auto fq = gb->normal_form(f);
      for (std::size_t j = 0; j <= d; ++j) {
        for (std::size_t i = 0; i < d; ++i) EXPECT_EQ(rat_mod_p(vq[i], p), vp[i]);
        vq = AQ.mul(fq, vq);
        vp = AP.mul(fp, vp);
      }
    }
    EXPECT_EQ(usable, 5);
  }
}

TEST(MinPolyModular, VerificationRejectsWrongReconstruction) {
  // N = 1 + p1 p2, so after p1 and p2 the constant term looks like -1.
  auto r = qring({"x"});
  BigInt N = BigInt(2147483647) * BigInt(2147483629) + 1;
  auto I = ideal(r, {"x^2 - " + N.get_str()});
  ModularOptions opts;
  opts.forced_primes = {2147483647u, 2147483629u};
  auto res = minpoly_modular(I, P(r, "x"), r->order(), opts);
  EXPECT_EQ(res.mu.to_string(), "z^2 - " + N.get_str());
  EXPECT_GE(res.report.failed_verifications, 1u);
  EXPECT_EQ(res.report.verification, Verification::Passed);

  opts.verify = false;
  auto un = minpoly_modular(I, P(r, "x"), r->order(), opts);
  EXPECT_EQ(un.mu.to_string(), "z^2 - 1");
}
