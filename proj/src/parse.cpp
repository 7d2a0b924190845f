#include "zdk/parse.hpp"

#include <cctype>
#include <optional>

#include "zdk/errors.hpp"

namespace zdk {

namespace {

enum class Tok { Ident, Int, Sym, End };

bool is_keyword(std::string_view w) {
  return w == "ring" || w == "order" || w == "ideal" || w == "elem";
}

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, col;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    unsigned char ch = static_cast<unsigned char>(s[i]);
    if (std::isspace(ch)) {
      advance(1);
    } else if (ch == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
    } else if (std::isalpha(ch) || ch == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::isdigit(ch)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Int, std::string(s.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::string_view("[](),=+-*/^;").find(static_cast<char>(ch)) != std::string_view::npos) {
      out.push_back({Tok::Sym, std::string(1, static_cast<char>(ch)), line, col});
      advance(1);
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + static_cast<char>(ch) + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool at_sym(char c) const { return peek().kind == Tok::Sym && peek().text[0] == c; }
  bool at_ident(std::string_view w) const { return peek().kind == Tok::Ident && peek().text == w; }
  bool accept(char c) {
    if (!at_sym(c)) return false;
    next();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    std::string near = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.col, what + " near " + near);
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

template <class K>
class ExprParser {
 public:
  ExprParser(const RingPtr<K>& ring, Cursor& cur) : ring_(ring), cur_(cur) {}

  Poly<K> expr() {
    bool negate = false;
    if (cur_.accept('-'))
      negate = true;
    else
      cur_.accept('+');
    Poly<K> acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (cur_.accept('+'))
        acc += term();
      else if (cur_.accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

 private:
  Poly<K> term() {
    Poly<K> acc = factor();
    for (;;) {
      if (cur_.accept('*')) {
        acc *= factor();
      } else if (cur_.at_sym('/')) {
        const Token& at = cur_.next();
        Poly<K> d = factor();
        if (d.is_zero() || !d.is_constant())
          throw ParseError(at.line, at.col, "division is only allowed by a nonzero constant");
        acc = acc.scale(ring_->field().inv(d.lead_coeff()));
      } else if ((cur_.peek().kind == Tok::Ident && !is_keyword(cur_.peek().text)) ||
                 cur_.at_sym('(')) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  Poly<K> factor() {
    Poly<K> base = atom();
    if (cur_.accept('^')) {
      const Token& e = cur_.peek();
      if (e.kind != Tok::Int) cur_.fail("expected a non-negative integer exponent");
      cur_.next();
      if (e.text.size() > 6) throw ParseError(e.line, e.col, "exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(e.text)));
    }
    return base;
  }

  Poly<K> atom() {
    const Token& t = cur_.peek();
    if (t.kind == Tok::Int) {
      cur_.next();
      return Poly<K>::constant(ring_, ring_->field().from_bigint(BigInt(t.text)));
    }
    if (t.kind == Tok::Ident) {
      int idx = ring_->var_index(t.text);
      if (idx < 0) throw UnknownVariable(t.line, t.col, t.text);
      cur_.next();
      return Poly<K>::var(ring_, static_cast<std::size_t>(idx));
    }
    if (cur_.accept('(')) {
      Poly<K> e = expr();
      cur_.expect(')');
      return e;
    }
    cur_.fail("expected a number, variable or '('");
  }

  const RingPtr<K>& ring_;
  Cursor& cur_;
};

template <class K>
Problem<K> parse_body(K field, std::vector<std::string> vars, TermOrder order, Cursor& cur) {
  Problem<K> prob;
  prob.ring = make_ring(std::move(field), std::move(vars), order);
  bool have_ideal = false;
  for (;;) {
    while (cur.accept(';')) {
    }
    if (cur.peek().kind == Tok::End) break;
    if (cur.at_ident("ideal")) {
      if (have_ideal) cur.fail("duplicate ideal declaration");
      cur.next();
      cur.expect('=');
      cur.expect('[');
      ExprParser<K> ep(prob.ring, cur);
      if (!cur.at_sym(']')) {
        prob.ideal.push_back(ep.expr());
        while (cur.accept(',')) prob.ideal.push_back(ep.expr());
      }
      cur.expect(']');
      have_ideal = true;
    } else if (cur.at_ident("elem")) {
      cur.next();
      const Token& name = cur.peek();
      if (name.kind != Tok::Ident) cur.fail("expected an element name");
      std::string n = name.text;
      cur.next();
      cur.expect('=');
      ExprParser<K> ep(prob.ring, cur);
      prob.elems.emplace_back(n, ep.expr());
    } else {
      cur.fail("expected 'ideal' or 'elem'");
    }
  }
  if (!have_ideal) cur.fail("missing ideal declaration");
  return prob;
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  Cursor cur(lex(text));
  while (cur.accept(';')) {
  }
  if (!cur.at_ident("ring")) cur.fail("expected 'ring'");
  cur.next();

  // field: "Q", "F101" or "F 101"
  const Token ft = cur.peek();
  if (ft.kind != Tok::Ident) cur.fail("expected a field");
  cur.next();
  std::optional<std::string> pdigits;
  if (ft.text == "Q") {
  } else if (ft.text == "F" && cur.peek().kind == Tok::Int) {
    pdigits = cur.next().text;
  } else if (ft.text.size() > 1 && ft.text[0] == 'F' &&
             ft.text.find_first_not_of("0123456789", 1) == std::string::npos) {
    pdigits = ft.text.substr(1);
  } else {
    throw ParseError(ft.line, ft.col, "unknown field '" + ft.text + "'");
  }
  std::optional<PrimeField> fp;
  if (pdigits) {
    bool ok = pdigits->size() <= 10;
    unsigned long long p = ok ? std::stoull(*pdigits) : 0;
    ok = ok && p < (1ULL << 31) && is_prime_u64(p);
    if (!ok) throw NonPrimeField(ft.line, ft.col, *pdigits);
    fp.emplace(static_cast<std::uint32_t>(p));
  }

  cur.expect('[');
  std::vector<std::string> vars;
  do {
    const Token& v = cur.peek();
    if (v.kind != Tok::Ident) cur.fail("expected a variable name");
    if (is_keyword(v.text)) throw ParseError(v.line, v.col, "'" + v.text + "' is reserved");
    for (const auto& w : vars)
      if (w == v.text) throw ParseError(v.line, v.col, "duplicate variable '" + v.text + "'");
    if (vars.size() == kMaxVars) throw ParseError(v.line, v.col, "at most 16 variables are supported");
    vars.push_back(v.text);
    cur.next();
  } while (cur.accept(','));
  cur.expect(']');

  TermOrder order = TermOrder::degrevlex(vars.size());
  if (cur.at_ident("order")) {
    cur.next();
    const Token& o = cur.peek();
    if (o.kind == Tok::Ident && o.text == "lex")
      order = TermOrder::lex(vars.size());
    else if (o.kind == Tok::Ident && o.text == "deglex")
      order = TermOrder::deglex(vars.size());
    else if (o.kind == Tok::Ident && o.text == "degrevlex")
      order = TermOrder::degrevlex(vars.size());
    else
      cur.fail("expected lex, deglex or degrevlex");
    cur.next();
  }

  if (fp) return ProblemFile{parse_body(*fp, std::move(vars), order, cur)};
  return ProblemFile{parse_body(Rationals{}, std::move(vars), order, cur)};
}

template <class K>
Poly<K> parse_poly(const RingPtr<K>& ring, std::string_view text) {
  Cursor cur(lex(text));
  ExprParser<K> ep(ring, cur);
  Poly<K> f = ep.expr();
  if (cur.peek().kind != Tok::End) cur.fail("unexpected trailing input");
  return f;
}

template Poly<Rationals> parse_poly(const RingPtr<Rationals>&, std::string_view);
template Poly<PrimeField> parse_poly(const RingPtr<PrimeField>&, std::string_view);

}  // namespace zdk
