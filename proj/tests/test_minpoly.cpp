#include <gtest/gtest.h>

#include <random>

#include "zdk/errors.hpp"
#include "zdk/lindep.hpp"
#include "zdk/minpoly.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace zdk;
using namespace zdk::test_support;

namespace {

template <class K>
Ideal<K> random_ideal(const RingPtr<K>& r, std::mt19937& rng) {
  return Ideal<K>(r, random_zero_dim(r, rng));
}

}  // namespace

TEST(LinDep, Examples) {
  Rationals Q;
  LinDepMill<Rationals> m(Q, 2);
  EXPECT_FALSE(m.feed({Rat(1), Rat(0)}));
  EXPECT_FALSE(m.feed({Rat(0), Rat(1)}));
  auto c = m.feed({Rat(1), Rat(1)});
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, (std::vector<Rat>{Rat(1), Rat(1)}));

  LinDepMill<Rationals> m2(Q, 2);
  EXPECT_FALSE(m2.feed({Rat(1), Rat(0)}));
  auto c2 = m2.feed({Rat(2), Rat(0)});
  ASSERT_TRUE(c2);
  EXPECT_EQ(*c2, std::vector<Rat>{Rat(2)});

  LinDepMill<Rationals> m3(Q, 2);
  auto c3 = m3.feed({Rat(0), Rat(0)});
  ASSERT_TRUE(c3);
  EXPECT_TRUE(c3->empty());

  EXPECT_THROW(m3.feed({Rat(1)}), DimensionMismatch);
}

TEST(LinDep, SoundCompleteFirst) {
  std::mt19937 rng(21);
  PrimeField F(7);  // small field: dependencies show up early and often
  for (int it = 0; it < 200; ++it) {
    std::size_t d = 1 + rng() % 6;
    LinDepMill<PrimeField> mill(F, d);
    std::vector<std::vector<std::uint32_t>> fed;
    bool found = false;
    for (std::size_t k = 0; k <= d; ++k) {
      std::vector<std::uint32_t> v(d);
      for (auto& x : v) x = rng() % 7;
      auto dep = mill.feed(v);
      auto with = fed;
      with.push_back(v);
      bool independent = rank_of(F, with) == with.size();
      EXPECT_EQ(dep.has_value(), !independent);
      if (dep) {
        ASSERT_EQ(dep->size(), fed.size());
        std::vector<std::uint32_t> sum(d, 0);
        for (std::size_t j = 0; j < fed.size(); ++j)
          for (std::size_t i = 0; i < d; ++i) F.add_mul(sum[i], (*dep)[j], fed[j][i]);
        EXPECT_EQ(sum, v);
        found = true;
        break;
      }
      fed.push_back(v);
    }
    EXPECT_TRUE(found);
  }
}

TEST(LinDep, RowsStayReduced) {
  std::mt19937 rng(22);
  Rationals Q;
  LinDepMill<Rationals> mill(Q, 5);
  for (int k = 0; k < 4; ++k) {
    std::vector<Rat> v(5);
    for (auto& x : v) x = Rat(static_cast<long>(rng() % 11) - 5);
    mill.feed(v);
  }
  for (std::size_t r = 0; r < mill.rank(); ++r) {
    std::size_t p = mill.pivots()[r];
    for (std::size_t i = 0; i < p; ++i) EXPECT_EQ(mill.rows()[r][i], 0);
    EXPECT_EQ(mill.rows()[r][p], 1);
    for (std::size_t s = 0; s < mill.rank(); ++s)
      if (s != r) EXPECT_EQ(mill.rows()[s][p], 0);
  }
}

TEST(MultMatrix, Examples) {
  auto r = qring({"x", "y"});
  QuotientAlgebra<Rationals> A(ideal(r, {"x^2", "y^2"}).reduced_gb());
  auto M = mult_matrix(A, P(r, "x + y"));
  std::vector<std::vector<Rat>> want{{0, 1, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, 0}};
  EXPECT_EQ(M.cols, want);
  auto I = mult_matrix(A, P(r, "1"));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(I.at(i, j), i == j ? 1 : 0);
  auto Z = mult_matrix(A, P(r, "0"));
  for (const auto& c : Z.cols)
    for (const auto& x : c) EXPECT_EQ(x, 0);
}

TEST(MinPoly, Examples) {
  auto r = qring({"x", "y"});
  auto I = ideal(r, {"x^2", "y^2"});
  auto rf = fring(2, {"x", "y"});
  auto I2 = ideal(rf, {"x^2", "y^2"});
  auto J = ideal(r, {"x^2 - 2", "y^2 - 3"});
  for (auto alg : {MinPolyAlg::Def, MinPolyAlg::Mat, MinPolyAlg::Elim}) {
    EXPECT_EQ(minpoly(I, P(r, "x + y"), alg).to_string(), "z^3");
    EXPECT_EQ(minpoly(I2, P(rf, "x + y"), alg).to_string(), "z^2");
    EXPECT_EQ(minpoly(J, P(r, "x + y"), alg).to_string(), "z^4 - 10z^2 + 1");
  }
  auto r1 = qring({"x"});
  EXPECT_EQ(minpoly(ideal(r1, {"x^2 - 2"}), P(r1, "x"), MinPolyAlg::Elim).to_string(), "z^2 - 2");
}

TEST(MinPoly, EdgeCases) {
  auto r = qring({"x", "y"});
  auto J = ideal(r, {"x^2 - 2", "y^2 - 3"});
  for (auto alg : {MinPolyAlg::Def, MinPolyAlg::Mat, MinPolyAlg::Elim}) {
    EXPECT_EQ(minpoly(J, P(r, "7/2"), alg).to_string(), "z - 7/2");
    EXPECT_EQ(minpoly(J, P(r, "x^2 - 2"), alg).to_string(), "z");
    EXPECT_EQ(minpoly(J, P(r, "0"), alg).to_string(), "z");
    EXPECT_EQ(minpoly(ideal(r, {"x", "x - 1"}), P(r, "x"), alg).to_string(), "1");
    EXPECT_THROW(minpoly(ideal(r, {"x^2"}), P(r, "x"), alg), NotZeroDimensional);
  }
  EXPECT_EQ(parse_minpoly_alg("mat"), MinPolyAlg::Mat);
  EXPECT_THROW(parse_minpoly_alg("fast"), std::invalid_argument);
}

TEST(MinPoly, OtherOrderings) {
  auto r = qring({"x", "y"});
  auto J = ideal(r, {"x^2 - 2", "y^2 - 3"});
  auto f = P(r, "x*y + x");
  auto want = minpoly_def(J, f, r->order());
  EXPECT_EQ(minpoly_def(J, f, TermOrder::lex(2)), want);
  EXPECT_EQ(minpoly_mat(J, f, TermOrder::deglex(2)), want);
  EXPECT_EQ(minpoly_elim(J, f, TermOrder::lex(2)), want);
}

TEST(MinPolyProperties, AgreementAndInvariantsFp) {
  std::mt19937 rng(31);
  for (int it = 0; it < 25; ++it) {
    auto r = fring(it % 2 ? 101 : 7, {"x", "y", "z"});
    auto I = random_ideal(r, rng);
    QuotientAlgebra<PrimeField> A(I.reduced_gb());
    ASSERT_LE(A.dim(), 30u);
    auto f = random_poly(r, rng, 3, 2);
    auto mu = minpoly_def(I, f, r->order());
    EXPECT_EQ(minpoly_mat(I, f, r->order()), mu);
    EXPECT_EQ(minpoly_elim(I, f, r->order()), mu);

    EXPECT_TRUE(mu.is_monic());
    EXPECT_GE(mu.degree(), 1);
    EXPECT_LE(static_cast<std::size_t>(mu.degree()), A.dim());
    EXPECT_TRUE(I.contains(subst_univariate(mu, f)));

    // 1, f, ..., f^(r-1) independent
    std::vector<std::vector<std::uint32_t>> pw;
    auto g = P(r, "1");
    for (int i = 0; i < mu.degree(); ++i) {
      pw.push_back(A.coords(g));
      g = g * f;
    }
    EXPECT_EQ(rank_of(r->field(), pw), pw.size());

    auto chi = charpoly(r->field(), mult_matrix(A, f));
    EXPECT_EQ(static_cast<std::size_t>(chi.degree()), A.dim());
    EXPECT_TRUE((chi % mu).is_zero());
  }
}

TEST(MinPolyProperties, AgreementQ) {
  std::mt19937 rng(32);
  for (int it = 0; it < 8; ++it) {
    auto r = qring({"x", "y"});
    auto I = random_ideal(r, rng);
    auto f = random_poly(r, rng, 3, 2);
    auto mu = minpoly_def(I, f, r->order());
    EXPECT_EQ(minpoly_mat(I, f, r->order()), mu);
    EXPECT_EQ(minpoly_elim(I, f, r->order()), mu);
    EXPECT_TRUE(I.contains(subst_univariate(mu, f)));
    QuotientAlgebra<Rationals> A(I.reduced_gb());
    auto v = A.eval(mu, f);
    for (const auto& x : v) EXPECT_EQ(x, 0);
    auto chi = charpoly(Rationals{}, mult_matrix(A, f));
    EXPECT_TRUE((chi % mu).is_zero());
  }
}
