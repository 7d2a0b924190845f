#include <gtest/gtest.h>

#include <random>

#include "zdk/arith.hpp"
#include "zdk/errors.hpp"
#include "zdk/groebner.hpp"
#include "zdk/quotient.hpp"
#include "support.hpp"

using namespace zdk;
using namespace zdk::test_support;

namespace {

template <class K>
std::vector<std::string> texts(const GBPtr<K>& gb) {
  std::vector<std::string> out;
  for (const auto& g : gb->elements()) out.push_back(g.to_string());
  return out;
}

template <class K>
Poly<K> spoly(const Poly<K>& f, const Poly<K>& g) {
  const K& F = f.field();
  PowerProduct l = f.lead_pp().lcm(g.lead_pp());
  return f.mul_term(f.lead_pp().quotient_into(l), F.inv(f.lead_coeff())) -
         g.mul_term(g.lead_pp().quotient_into(l), F.inv(g.lead_coeff()));
}

}  // namespace

TEST(ReducedGB, PaperExampleDegRevLex) {
  auto r = qring({"x", "y"});
  auto I = ideal(r, {"3x^3 - x^2 + 1", "x^2 - y"});
  auto gb = I.reduced_gb();
  EXPECT_EQ(texts(gb), (std::vector<std::string>{"y^2 + 1/3x - 1/9y + 1/9",
                                                   "x*y - 1/3y + 1/3", "x^2 - y"}));
  EXPECT_EQ(gb->normal_form(P(r, "y^3")).to_string(), "-1/27x - 17/81y + 8/81");
  EXPECT_TRUE(gb->contains(P(r, "3x^3 - x^2 + 1")));
  EXPECT_EQ(gb->normal_form(P(r, "x")), P(r, "x"));
  EXPECT_EQ(den_sigma(I), 9);
}

TEST(ReducedGB, MonomialIdealAnyOrder) {
  for (auto k : {OrderKind::Lex, OrderKind::DegLex, OrderKind::DegRevLex}) {
    auto r = qring({"x", "y"}, k);
    auto I = ideal(r, {"x^2", "y^2"});
    EXPECT_EQ(texts(I.reduced_gb()), (std::vector<std::string>{"y^2", "x^2"}));
    EXPECT_EQ(den_sigma(I), 1);
  }
}

TEST(ReducedGB, LinearFormLex) {
  auto r = qring({"x", "y", "z"}, OrderKind::Lex);
  auto I = ideal(r, {"2x + 3y + 5z"});
  EXPECT_EQ(texts(I.reduced_gb()), (std::vector<std::string>{"x + 3/2y + 5/2z"}));
  EXPECT_EQ(den_sigma(I), 2);
}

TEST(ReducedGB, ZeroAndUnit) {
  auto r = qring({"x", "y"});
  Ideal<Rationals> Z(r, {});
  EXPECT_TRUE(Z.reduced_gb()->is_zero_ideal());
  EXPECT_THROW(den_sigma(Z), ZeroIdeal);
  auto U = ideal(r, {"x*y - 1", "x"});
  EXPECT_TRUE(U.reduced_gb()->is_unit_ideal());
  EXPECT_EQ(quotient_basis(*U.reduced_gb()).size(), 0u);
}

TEST(ReducedGB, CacheSharedAcrossCopies) {
  auto r = qring({"x", "y"});
  auto I = ideal(r, {"x^2 - y", "y^2 - 1"});
  Ideal<Rationals> J = I;
  EXPECT_FALSE(J.has_cached_gb(r->order()));
  auto a = I.reduced_gb();
  EXPECT_TRUE(J.has_cached_gb(r->order()));
  EXPECT_EQ(a.get(), J.reduced_gb().get());
}

TEST(QuotientBasis, Examples) {
  auto r = qring({"x", "y"});
  auto B = quotient_basis(*ideal(r, {"x^2", "y^2"}).reduced_gb());
  std::vector<std::string> got;
  for (const auto& t : B.terms) got.push_back(t.is_one() ? "1" : format_power_product(t, r->vars()));
  EXPECT_EQ(got, (std::vector<std::string>{"1", "y", "x", "x*y"}));

  auto B2 = quotient_basis(*ideal(r, {"3x^3 - x^2 + 1", "x^2 - y"}).reduced_gb());
  got.clear();
  for (const auto& t : B2.terms) got.push_back(t.is_one() ? "1" : format_power_product(t, r->vars()));
  EXPECT_EQ(got, (std::vector<std::string>{"1", "y", "x"}));

  EXPECT_THROW(quotient_basis(*ideal(r, {"x"}).reduced_gb()), NotZeroDimensional);
}

TEST(ReduceModP, PaperExample) {
  auto r = qring({"x", "y"});
  auto I = ideal(r, {"3x^3 - x^2 + 1", "x^2 - y"});
  auto I2 = reduce_ideal_mod_p(I, r->order(), 2);
  EXPECT_TRUE(I2.has_cached_gb(r->order()));
  EXPECT_EQ(texts(I2.reduced_gb()), (std::vector<std::string>{"y^2 + x + y + 1", "x*y + y + 1",
                                                                "x^2 + y"}));
  EXPECT_THROW(reduce_ideal_mod_p(I, r->order(), 3), UglyPrime);

  auto M = ideal(r, {"x^2", "y^2"});
  EXPECT_EQ(texts(reduce_ideal_mod_p(M, r->order(), 7).reduced_gb()),
            (std::vector<std::string>{"y^2", "x^2"}));
}

TEST(Eliminate, Examples) {
  auto r = qring({"x", "y", "z"});
  auto I = ideal(r, {"z - x - y", "x^2", "y^2"});
  auto E = eliminate(I, {0, 1});
  EXPECT_EQ(E.ring()->vars(), (std::vector<std::string>{"z"}));
  EXPECT_EQ(texts(E.reduced_gb()), (std::vector<std::string>{"z^3"}));

  auto r2 = qring({"x", "y"});
  auto E2 = eliminate(ideal(r2, {"x - 1", "y - 2"}), {0});
  EXPECT_EQ(texts(E2.reduced_gb()), (std::vector<std::string>{"y - 2"}));

  auto E3 = eliminate(ideal(r2, {"x", "y"}), {0, 1});
  EXPECT_TRUE(E3.reduced_gb()->is_zero_ideal());
}

TEST(Intersect, Examples) {
  auto r = qring({"x", "y"});
  auto a = intersect(ideal(r, {"x"}), ideal(r, {"y"}));
  EXPECT_EQ(texts(a.reduced_gb()), (std::vector<std::string>{"x*y"}));
  auto b = intersect(ideal(r, {"x", "y"}), ideal(r, {"x", "y - 1"}));
  EXPECT_EQ(texts(b.reduced_gb()), (std::vector<std::string>{"x", "y^2 - y"}));
  auto I = ideal(r, {"x^2 - y", "y^3 + x"});
  EXPECT_TRUE(intersect(I, I) == I);
}

TEST(GroebnerProperties, SPairCertificate) {
  std::mt19937 rng(11);
  for (int it = 0; it < 20; ++it) {
    auto r = qring({"x", "y", "z"}, it % 2 ? OrderKind::Lex : OrderKind::DegRevLex);
    auto gens = random_zero_dim(r, rng);
    Ideal<Rationals> I(r, gens);
    auto gb = I.reduced_gb();
    const auto& G = gb->elements();
    for (std::size_t i = 0; i < G.size(); ++i) {
      EXPECT_TRUE(G[i].is_monic());
      for (std::size_t j = 0; j < G.size(); ++j) {
        if (i == j) continue;
        for (const auto& t : G[j].terms()) EXPECT_FALSE(G[i].lead_pp().divides(t.pp));
        if (j > i) EXPECT_TRUE(gb->normal_form(spoly(G[i], G[j])).is_zero());
      }
    }
    for (const auto& g : gens) EXPECT_TRUE(gb->contains(g));
    EXPECT_GE(quotient_basis(*gb).size(), 8u);
  }
}

TEST(GroebnerProperties, SPairCertificateFp) {
  std::mt19937 rng(12);
  for (int it = 0; it < 20; ++it) {
    auto r = make_ring(PrimeField(32003), {"x", "y", "z"}, TermOrder::lex(3));
    auto gens = random_zero_dim(r, rng);
    auto gb = Ideal<PrimeField>(r, gens).reduced_gb();
    const auto& G = gb->elements();
    for (std::size_t i = 0; i < G.size(); ++i)
      for (std::size_t j = i + 1; j < G.size(); ++j)
        EXPECT_TRUE(gb->normal_form(spoly(G[i], G[j])).is_zero());
    for (const auto& g : gens) EXPECT_TRUE(gb->contains(g));
  }
}

TEST(GroebnerProperties, ReductionOfReducedBasisIsReduced) {
  std::mt19937 rng(13);
  int checked = 0;
  for (int it = 0; it < 30 && checked < 15; ++it) {
    auto r = qring({"x", "y"});
    Ideal<Rationals> I(r, random_zero_dim(r, rng));
    BigInt den = den_sigma(I);
    std::uint32_t p = 0;
    for (std::uint32_t q : {101u, 103u, 107u, 109u, 113u}) {
      if (den % q != 0) {
        p = q;
        break;
      }
    }
    if (p == 0) continue;
    ++checked;
    auto Ip = reduce_ideal_mod_p(I, r->order(), p);
    auto installed = Ip.reduced_gb();
    auto recomputed = buchberger(Ip.ring(), Ip.generators());
    EXPECT_EQ(installed->to_string(), recomputed->to_string());

    // NF commutes with reduction mod p
    for (int k = 0; k < 5; ++k) {
      auto f = random_poly(r, rng, 4, 4);
      if (den_poly(f) % p == 0) continue;
      auto lhs = map_mod_p(I.reduced_gb()->normal_form(f), Ip.ring());
      auto rhs = installed->normal_form(map_mod_p(f, Ip.ring()));
      EXPECT_EQ(lhs, rhs);
    }
  }
  EXPECT_GE(checked, 10);
}

TEST(GroebnerProperties, NormalFormDenominators) {
  std::mt19937 rng(14);
  for (int it = 0; it < 15; ++it) {
    auto r = qring({"x", "y"});
    Ideal<Rationals> I(r, random_zero_dim(r, rng));
    BigInt ds = den_sigma(I);
    for (int k = 0; k < 4; ++k) {
      auto f = random_poly(r, rng, 4, 4);
      auto nf = I.reduced_gb()->normal_form(f);
      if (nf.is_zero()) continue;
      EXPECT_TRUE(rad_divides(den_poly(nf), den_poly(f) * ds));
    }
  }
}

TEST(GroebnerProperties, NaiveReductionPitfall) {
  auto r = qring({"x"});
  auto I = ideal(r, {"6x", "x^2"});
  EXPECT_EQ(texts(I.reduced_gb()), (std::vector<std::string>{"x"}));
  auto good = reduce_ideal_mod_p(I, r->order(), 2);
  auto rp = ring_mod_p(r, 2);
  Ideal<PrimeField> naive(rp, {map_mod_p(P(r, "6x"), rp), map_mod_p(P(r, "x^2"), rp)});
  EXPECT_EQ(quotient_basis(*good.reduced_gb()).size(), 1u);
  EXPECT_EQ(quotient_basis(*naive.reduced_gb()).size(), 2u);
  EXPECT_FALSE(naive.contains(P(rp, "x")));
}

TEST(GroebnerProperties, BasisDivisorClosedAndOrderIndependent) {
  std::mt19937 rng(15);
  for (int it = 0; it < 10; ++it) {
    auto r = fring(101, {"x", "y", "z"});
    auto gens = random_zero_dim(r, rng);
    std::size_t d0 = 0;
    for (auto k : {OrderKind::DegRevLex, OrderKind::DegLex, OrderKind::Lex}) {
      auto rk = make_ring(r->field(), r->vars(), TermOrder(k, 3));
      std::vector<Poly<PrimeField>> g;
      for (const auto& h : gens) g.push_back(h.in_ring(rk));
      auto gb = Ideal<PrimeField>(rk, g).reduced_gb();
      auto B = quotient_basis(*gb);
      if (k == OrderKind::DegRevLex) d0 = B.size();
      EXPECT_EQ(B.size(), d0);
      for (const auto& t : B.terms)
        for (std::size_t v = 0; v < 3; ++v)
          if (t[v] > 0) EXPECT_GE(B.find(PowerProduct::variable(3, v).quotient_into(t)), 0);
    }
  }
}

TEST(QuotientAlgebra, CoordinatesMatchNormalForm) {
  std::mt19937 rng(16);
  for (int it = 0; it < 10; ++it) {
    auto r = qring({"x", "y", "z"});
    Ideal<Rationals> I(r, random_zero_dim(r, rng));
    auto gb = I.reduced_gb();
    if (gb->is_unit_ideal()) continue;
    QuotientAlgebra<Rationals> A(gb);
    for (int k = 0; k < 4; ++k) {
      auto f = random_poly(r, rng, 3, 3);
      auto g = random_poly(r, rng, 3, 2);
      EXPECT_EQ(A.to_poly(A.coords(f)), gb->normal_form(f));
      EXPECT_EQ(A.to_poly(A.mul(g, A.coords(f))), gb->normal_form(f * g));
    }
  }
}

TEST(QuotientAlgebra, Errors) {
  auto r = qring({"x", "y"});
  QuotientAlgebra<Rationals> A(ideal(r, {"x^2", "y^2"}).reduced_gb());
  EXPECT_EQ(A.dim(), 4u);
  EXPECT_THROW(A.mul(P(r, "x"), std::vector<Rat>(3)),
               DimensionMismatch);
  EXPECT_THROW(QuotientAlgebra<Rationals>(ideal(r, {"x"}).reduced_gb()), NotZeroDimensional);
}

TEST(GroebnerProperties, KnownBasisPrefixAgrees) {
  std::mt19937 rng(17);
  for (int it = 0; it < 20; ++it) {
    auto r = qring({"x", "y", "z"}, it % 2 ? OrderKind::Lex : OrderKind::DegRevLex);
    Ideal<Rationals> I(r, random_zero_dim(r, rng));
    auto extra = random_poly(r, rng, 3, 2);
    std::size_t known = I.reduced_gb()->elements().size();
    auto J = I.plus({extra});  // seeded with I's GB
    std::vector<Poly<Rationals>> gens = I.generators();
    gens.push_back(extra);
    auto scratch = buchberger(r, gens);
    EXPECT_EQ(J.reduced_gb()->to_string(), scratch->to_string());
    EXPECT_EQ(buchberger(r, J.generators(), known)->to_string(),
              scratch->to_string());
  }
}
