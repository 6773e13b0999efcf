#include "haantjes/parse.hpp"

#include <cctype>
#include <cstdint>
#include <vector>

#include "haantjes/errors.hpp"

namespace haantjes {

namespace {

enum class Tok { Num, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Num, i, s.substr(i, j - i)});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      out.push_back({Tok::Ident, i, s.substr(i, j - i)});
      i = j;
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default:
        throw ParseError(ParseErrorKind::Syntax, i,
                         std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, i, std::string(1, c)});
    ++i;
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

constexpr std::int32_t kMaxExponent = 1 << 20;

class Parser {
 public:
  Parser(const std::string& src, const Chart& chart)
      : toks_(lex(src)), chart_(chart) {}

  RationalFn run() {
    RationalFn v = expr();
    if (peek().kind != Tok::End)
      throw ParseError(ParseErrorKind::Syntax, peek().pos, "unexpected trailing input");
    return v;
  }

 private:
  const Token& peek(int ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& take() { return toks_[pos_++]; }

  RationalFn expr() {
    RationalFn v = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = take().kind == Tok::Minus;
      RationalFn rhs = term();
      v = minus ? v - rhs : v + rhs;
    }
    return v;
  }

  RationalFn term() {
    RationalFn v = factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token& op = take();
      RationalFn rhs = factor();
      if (op.kind == Tok::Star) {
        v = v * rhs;
      } else {
        if (rhs.is_zero())
          throw ParseError(ParseErrorKind::ZeroDivision, op.pos,
                           "division by the zero polynomial");
        v = v / rhs;
      }
    }
    return v;
  }

  RationalFn factor() {
    RationalFn b = base();
    if (peek().kind != Tok::Caret) return b;
    const Token& caret = take();
    std::int32_t e = exponent();
    if (e < 0 && b.is_zero())
      throw ParseError(ParseErrorKind::ZeroDivision, caret.pos,
                       "zero raised to a negative power");
    return b.pow(e);
  }

  std::int32_t exponent() {
    bool neg = false;
    if (peek().kind == Tok::Minus) {
      take();
      neg = true;
    }
    if (peek().kind != Tok::Num)
      throw ParseError(ParseErrorKind::BadExponent, peek().pos,
                       "exponent must be an integer literal");
    const Token& t = take();
    if (t.text.size() > 7)
      throw ParseError(ParseErrorKind::BadExponent, t.pos, "exponent out of range");
    std::int32_t e = static_cast<std::int32_t>(std::stol(t.text));
    if (e > kMaxExponent)
      throw ParseError(ParseErrorKind::BadExponent, t.pos, "exponent out of range");
    return neg ? -e : e;
  }

  RationalFn base() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Minus:
        take();
        return -base();
      case Tok::Num: {
        take();
        // fraction literals are lexical: digits '/' digits with no spaces,
        // binding tighter than any operator (so 6/2^2 is (6/2)^2)
        if (peek().kind == Tok::Slash && peek(1).kind == Tok::Num &&
            peek().pos == t.pos + t.text.size() && peek(1).pos == peek().pos + 1) {
          const Token& slash = take();
          const Token& den = take();
          mpz_class d(den.text, 10);
          if (d == 0)
            throw ParseError(ParseErrorKind::ZeroDivision, slash.pos,
                             "fraction literal with zero denominator");
          return RationalFn::constant(chart_, Rational(mpq_class(mpz_class(t.text, 10), d)));
        }
        return RationalFn::constant(chart_, Rational(mpq_class(mpz_class(t.text, 10))));
      }
      case Tok::Ident: {
        take();
        auto idx = chart_.index_of(t.text);
        if (!idx)
          throw ParseError(ParseErrorKind::UnknownVariable, t.pos,
                           "unknown variable '" + t.text + "'");
        return RationalFn::variable(chart_, *idx);
      }
      case Tok::LParen: {
        take();
        RationalFn v = expr();
        if (peek().kind != Tok::RParen)
          throw ParseError(ParseErrorKind::Syntax, peek().pos, "expected ')'");
        take();
        return v;
      }
      default:
        throw ParseError(ParseErrorKind::Syntax, t.pos, "expected a value");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Chart& chart_;
};

std::string monomial_text(const Monomial& m, const Chart& chart) {
  std::string out;
  for (int i = 0; i < m.nvars(); ++i) {
    std::int32_t e = m.exp(i);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += chart.name(i);
    if (e != 1) {
      out += "^";
      out += std::to_string(e);
    }
  }
  return out;
}

}  // namespace

RationalFn parse_expr(const std::string& text, const Chart& chart) {
  return Parser(text, chart).run();
}

std::string print_polynomial(const Polynomial& p, const Chart& chart) {
  if (p.nvars() != chart.dim()) throw DimensionMismatchError("polynomial arity mismatch");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool neg = c.sign() < 0;
    std::string mag = c.abs().str();
    std::string mono = monomial_text(m, chart);
    std::string piece;
    if (mono.empty())
      piece = mag;
    else if (mag == "1")
      piece = mono;
    else
      piece = mag + "*" + mono;
    if (first) {
      if (neg) {
        // a leading '-' would bind before '^' on re-parse, so a negative
        // leading term always spells its coefficient: -1*u1^2, not -u1^2
        out += "-";
        out += mono.empty() ? mag : mag + "*" + mono;
      } else {
        out += piece;
      }
      first = false;
    } else {
      out += neg ? " - " : " + ";
      out += piece;
    }
  }
  return out;
}

std::string print_rational(const RationalFn& f) {
  if (f.is_polynomial()) return print_polynomial(f.num(), f.chart());
  return "(" + print_polynomial(f.num(), f.chart()) + ")/(" +
         print_polynomial(f.den(), f.chart()) + ")";
}

std::string RationalFn::str() const { return print_rational(*this); }

}  // namespace haantjes
