#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "zdk/poly.hpp"

namespace zdk {

template <class K>
struct Problem {
  RingPtr<K> ring;
  std::vector<Poly<K>> ideal;
  std::vector<std::pair<std::string, Poly<K>>> elems;
};

/// A parsed .zdk file:
///
///   ring Q[x,y] order degrevlex      # or F101[...]; lex | deglex | degrevlex
///   ideal = [3x^3 - x^2 + 1, x^2 - y]
///   elem f = x + y
///
/// Expressions accept integers, rationals, juxtaposition (3x^2), parentheses,
/// powers of parenthesized expressions and division by nonzero constants.
/// Lines may carry '#' comments.
struct ProblemFile {
  std::variant<Problem<Rationals>, Problem<PrimeField>> content;

  bool over_q() const { return content.index() == 0; }
};

// Throws ParseError (or UnknownVariable / NonPrimeField) with a 1-based position.
ProblemFile parse_problem(std::string_view text);

template <class K>
Poly<K> parse_poly(const RingPtr<K>& ring, std::string_view text);

}  // namespace zdk
