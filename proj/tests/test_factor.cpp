#include <gtest/gtest.h>

#include <random>

#include "zdk/errors.hpp"
#include "zdk/factor.hpp"
#include "support.hpp"

using namespace zdk;
using namespace zdk::test_support;

namespace {

// Brute force over F_p: f is irreducible iff no monic g with 1 <= deg g <= deg f / 2 divides it.
bool irreducible_brute(const UPoly<PrimeField>& f) {
  const PrimeField& F = f.field();
  std::uint32_t p = F.modulus();
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(d) + 1, 0);
    c[static_cast<std::size_t>(d)] = 1;
    for (;;) {
      UPoly<PrimeField> g(F, c);
      if ((f % g).is_zero()) return false;
      std::size_t i = 0;
      while (i < static_cast<std::size_t>(d) && ++c[i] == p) c[i++] = 0;
      if (i == static_cast<std::size_t>(d)) break;
    }
  }
  return true;
}

std::string show(const Factorization<Rationals>& fz) {
  std::string s;
  for (const auto& [f, m] : fz.factors) s += "(" + f.to_string() + ")^" + std::to_string(m) + " ";
  return s;
}

}  // namespace

TEST(FactorFp, Examples) {
  auto a = factor_uni_fp(up(2, {1, 0, 1}));
  ASSERT_EQ(a.distinct(), 1u);
  EXPECT_EQ(a.factors[0].first, up(2, {1, 1}));
  EXPECT_EQ(a.factors[0].second, 2);

  auto b = factor_uni_fp(up(5, {1, 0, 0, 0, 1}));
  ASSERT_EQ(b.distinct(), 2u);
  EXPECT_EQ(b.factors[0].first, up(5, {2, 0, 1}));
  EXPECT_EQ(b.factors[1].first, up(5, {3, 0, 1}));

  auto c = factor_uni_fp(up(2, {1, 1, 1}));
  EXPECT_EQ(c.distinct(), 1u);
  EXPECT_EQ(c.factors[0].second, 1);

  // x^p - x splits into all linear factors
  std::vector<long long> v(8, 0);
  v[7] = 1;
  v[1] = -1;
  auto d = factor_uni_fp(up(7, v));
  EXPECT_EQ(d.distinct(), 7u);

  // a p-th power
  auto e = factor_uni_fp(up(3, {1, 0, 0, 1}));
  ASSERT_EQ(e.distinct(), 1u);
  EXPECT_EQ(e.factors[0].second, 3);

  EXPECT_EQ(factor_uni_fp(up(7, {3})).distinct(), 0u);
  EXPECT_THROW(factor_uni_fp(up(7, {})), ZeroPolynomial);
}

TEST(FactorFp, ExpandAndIrreducible) {
  std::mt19937 rng(5);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    PrimeField F(p);
    for (int trial = 0; trial < 40; ++trial) {
      int deg = 1 + static_cast<int>(rng() % 9);
      std::vector<long long> c(static_cast<std::size_t>(deg) + 1);
      for (auto& x : c) x = static_cast<long long>(rng() % p);
      c.back() = 1 + static_cast<long long>(rng() % (p - 1));
      auto f = up(p, c);
      auto fz = factor_uni_fp(f);
      EXPECT_EQ(fz.expand(F), f);
      for (std::size_t i = 0; i < fz.factors.size(); ++i) {
        EXPECT_TRUE(fz.factors[i].first.is_monic());
        EXPECT_TRUE(irreducible_brute(fz.factors[i].first));
        if (i > 0) EXPECT_FALSE(fz.factors[i].first == fz.factors[i - 1].first);
      }
    }
  }
}

TEST(FactorFp, LargePrime) {
  PrimeField F(32003);
  // (x^2 + 1)(x^3 + x + 7)(x - 5)^2 over a large field
  auto f = up(32003, {1, 0, 1}) * up(32003, {7, 1, 0, 1}) * up(32003, {-5, 1}).pow(2);
  auto fz = factor_uni_fp(f);
  EXPECT_EQ(fz.expand(F), f);
  int total = 0;
  for (const auto& [g, m] : fz.factors) total += g.degree() * m;
  EXPECT_EQ(total, 7);
}

TEST(FactorQ, Examples) {
  auto a = factor_uni_q(uq({1, 0, -10, 0, 1}));
  EXPECT_EQ(a.distinct(), 1u) << show(a);

  auto b = factor_uni_q(uq({-1, 0, 1}));
  ASSERT_EQ(b.distinct(), 2u);
  EXPECT_EQ(b.factors[0].first.to_string(), "z - 1");
  EXPECT_EQ(b.factors[1].first.to_string(), "z + 1");

  auto c = factor_uni_q(uq({0, 0, 0, 1}));
  ASSERT_EQ(c.distinct(), 1u);
  EXPECT_EQ(c.factors[0].first.to_string(), "z");
  EXPECT_EQ(c.factors[0].second, 3);

  // x^4 + 1 splits modulo every prime but is irreducible over Q
  EXPECT_EQ(factor_uni_q(uq({1, 0, 0, 0, 1})).distinct(), 1u);

  // leading coefficient and rational coefficients
  auto f = uq({-3, 0, 4}) * uq({1, 6}) * uq({2, 0, 0, 5});
  auto d = factor_uni_q(f.scale(Rat(7, 3)));
  EXPECT_EQ(d.distinct(), 3u) << show(d);
  EXPECT_EQ(d.expand(Rationals{}), f.scale(Rat(7, 3)));

  // x^8 - 1 = (x-1)(x+1)(x^2+1)(x^4+1)
  std::vector<long> v(9, 0);
  v[0] = -1;
  v[8] = 1;
  auto e = factor_uni_q(uq(v));
  EXPECT_EQ(e.distinct(), 4u) << show(e);
}

TEST(FactorQ, ProductsOfKnownFactors) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    // random factors of degree 1..4, with an irreducibility check through F_p images
    int k = 1 + static_cast<int>(rng() % 4);
    UPoly<Rationals> f = uq({1});
    std::vector<UPoly<Rationals>> parts;
    for (int i = 0; i < k; ++i) {
      int deg = 1 + static_cast<int>(rng() % 4);
      std::vector<long> c(static_cast<std::size_t>(deg) + 1);
      for (auto& x : c) x = static_cast<long>(rng() % 41) - 20;
      c.back() = 1 + static_cast<long>(rng() % 5);
      parts.push_back(uq(c));
      f = f * parts.back();
    }
    auto fz = factor_uni_q(f);
    EXPECT_EQ(fz.expand(Rationals{}), f);
    // every known part is a product of reported factors
    for (const auto& part : parts) {
      UPoly<Rationals> rest = part.monic();
      for (const auto& [g, m] : fz.factors)
        while (rest.degree() > 0 && (rest % g).is_zero()) rest = rest / g;
      EXPECT_EQ(rest.degree(), 0);
    }
    // factors are pairwise coprime and none splits further into the known parts
    for (std::size_t i = 0; i < fz.factors.size(); ++i)
      for (std::size_t j = i + 1; j < fz.factors.size(); ++j)
        EXPECT_EQ(gcd(fz.factors[i].first, fz.factors[j].first).degree(), 0);
  }
}

TEST(FactorQ, IrreducibleOracleViaSmallPrime) {
  // a monic integer polynomial irreducible modulo some prime is irreducible over Q
  std::mt19937 rng(99);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 25; ++trial) {
    int deg = 2 + static_cast<int>(rng() % 6);
    std::vector<long> c(static_cast<std::size_t>(deg) + 1);
    std::vector<long long> c5(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      c[i] = static_cast<long>(rng() % 21) - 10;
      c5[i] = ((c[i] % 5) + 5) % 5;
    }
    c.back() = 1;
    c5.back() = 1;
    if (!irreducible_brute(up(5, c5))) continue;
    ++checked;
    EXPECT_EQ(factor_uni_q(uq(c)).distinct(), 1u);
  }
  EXPECT_EQ(checked, 25);
}
