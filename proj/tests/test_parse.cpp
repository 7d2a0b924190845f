#include <gtest/gtest.h>

#include <random>

#include "zdk/errors.hpp"
#include "zdk/groebner.hpp"
#include "zdk/parse.hpp"
#include "support.hpp"

using namespace zdk;
using namespace zdk::test_support;

TEST(ParseProblem, GroebnerFixture) {
  auto pf = parse_problem("ring Q[x,y] order degrevlex\nideal = [3x^3 - x^2 + 1, x^2 - y]\n");
  ASSERT_TRUE(pf.over_q());
  const auto& pb = std::get<Problem<Rationals>>(pf.content);
  EXPECT_EQ(pb.ring->vars(), (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(pb.ring->order(), TermOrder::degrevlex(2));
  ASSERT_EQ(pb.ideal.size(), 2u);
  EXPECT_EQ(pb.ideal[0].to_string(), "3x^3 - x^2 + 1");
  EXPECT_EQ(pb.ideal[1].to_string(), "x^2 - y");
  EXPECT_TRUE(pb.elems.empty());
}

TEST(ParseProblem, PrimeFieldLex) {
  auto pf = parse_problem("ring F101[x] order lex\nideal = [x^2]\n");
  ASSERT_FALSE(pf.over_q());
  const auto& pb = std::get<Problem<PrimeField>>(pf.content);
  EXPECT_EQ(pb.ring->field().characteristic(), 101u);
  EXPECT_EQ(pb.ring->order(), TermOrder::lex(1));
  EXPECT_EQ(pb.ideal[0].to_string(), "x^2");
}

TEST(ParseProblem, ElemsCommentsAndLayout) {
  auto pf = parse_problem(
      "# a comment\n"
      "ring Q[a,b] order deglex   # trailing\n"
      "ideal = [\n  a^2 - 1/2,\n  b^3\n]\n"
      "elem f = 2*a*b - a/3\n"
      "elem g = (a + b)^2\n");
  const auto& pb = std::get<Problem<Rationals>>(pf.content);
  EXPECT_EQ(pb.ring->order(), TermOrder::deglex(2));
  EXPECT_EQ(pb.ideal[0].to_string(), "a^2 - 1/2");
  ASSERT_EQ(pb.elems.size(), 2u);
  EXPECT_EQ(pb.elems[0].first, "f");
  EXPECT_EQ(pb.elems[0].second.to_string(), "2a*b - 1/3a");
  EXPECT_EQ(pb.elems[1].second.to_string(), "a^2 + 2a*b + b^2");
}

TEST(ParseProblem, Errors) {
  EXPECT_THROW(parse_problem("ring F4[x] order lex\nideal = [x]\n"), NonPrimeField);
  EXPECT_THROW(parse_problem("ring F1[x] order lex\nideal = [x]\n"), NonPrimeField);
  EXPECT_THROW(parse_problem("ring Q[x] order lex\nideal = [x + w]\n"), UnknownVariable);
  EXPECT_THROW(parse_problem("ring Q[x,x] order lex\nideal = [x]\n"), ParseError);
  EXPECT_THROW(parse_problem("ring Q[x] order revlex\nideal = [x]\n"), ParseError);
  EXPECT_THROW(parse_problem("ring Q[x] order lex\n"), ParseError);
  EXPECT_THROW(parse_problem("ring Q[x] order lex\nideal = [x +]\n"), ParseError);
  EXPECT_THROW(parse_problem("ring Q[x] order lex\nideal = [x/0]\n"), ParseError);
  try {
    parse_problem("ring Q[x,y] order lex\nideal = [x^2, y + z]\n");
    FAIL();
  } catch (const UnknownVariable& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 19u);
  }
}

// print(parse(print(f))) == print(f)
TEST(ParseProblem, RoundTripIdempotent) {
  std::mt19937 rng(4);
  auto rq = qring({"x", "y", "z"});
  auto rf = fring(32003, {"x", "y", "z"});
  for (int it = 0; it < 100; ++it) {
    auto f = random_poly(rq, rng, 1 + static_cast<int>(rng() % 6), 4);
    std::string s = f.to_string();
    EXPECT_EQ(parse_poly(rq, s).to_string(), s);
    EXPECT_EQ(parse_poly(rq, s), f);
    auto g = random_poly(rf, rng, 1 + static_cast<int>(rng() % 6), 4);
    std::string t = g.to_string();
    EXPECT_EQ(parse_poly(rf, t), g);
  }
  std::string text = "ring F7[u,v] order degrevlex\nideal = [u^2 - 3v, 2u*v + 1]\n";
  auto pb = std::get<Problem<PrimeField>>(parse_problem(text).content);
  std::string again = "ring F7[u,v] order degrevlex\nideal = [" + pb.ideal[0].to_string() + ", " +
                      pb.ideal[1].to_string() + "]\n";
  auto pb2 = std::get<Problem<PrimeField>>(parse_problem(again).content);
  EXPECT_EQ(pb2.ideal, pb.ideal);
}
