#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gts/polynomial.hpp"

namespace gts {

/// Error carrying a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

struct Token {
  enum class Kind { Identifier, Integer, Symbol, End } kind = Kind::End;
  std::string text;
  std::size_t line = 1, column = 1;
};

/// Identifiers may carry trailing primes (A', M''); `#` and `//` start comments.
std::vector<Token> tokenize(std::string_view source);

class TokenCursor {
 public:
  explicit TokenCursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == Token::Kind::End; }
  bool is_symbol(std::string_view s, std::size_t ahead = 0) const {
    return peek(ahead).kind == Token::Kind::Symbol && peek(ahead).text == s;
  }
  bool is_word(std::string_view s, std::size_t ahead = 0) const {
    return peek(ahead).kind == Token::Kind::Identifier && peek(ahead).text == s;
  }
  bool accept_symbol(std::string_view s) {
    if (!is_symbol(s)) return false;
    next();
    return true;
  }
  const Token& expect_symbol(std::string_view s);
  const Token& expect_identifier(std::string_view what = "identifier");
  const Token& expect_word(std::string_view word);
  long expect_integer(std::string_view what = "integer");
  [[noreturn]] void fail(const std::string& message) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

/// Syntax tree of a polynomial expression; kept so scripts print back verbatim.
struct PolyExpr {
  enum class Kind { Number, Variable, Sum, Product, Power, Negate };
  Kind kind = Kind::Number;
  std::string text;       // literal ("3", "3/2") or variable name
  unsigned exponent = 0;  // Power only
  std::vector<PolyExpr> args;
  std::size_t line = 0, column = 0;

  bool operator==(const PolyExpr& o) const {
    return kind == o.kind && text == o.text && exponent == o.exponent && args == o.args;
  }
};

PolyExpr parse_poly_expr(TokenCursor& cursor);
PolyExpr parse_poly_expr(std::string_view text);
std::string to_string(const PolyExpr& e);
void collect_variables(const PolyExpr& e, std::vector<const PolyExpr*>& out);

template <CoefficientField F>
Polynomial<F> evaluate(const PolyExpr& e, const RingPtr<F>& ring) {
  using P = Polynomial<F>;
  switch (e.kind) {
    case PolyExpr::Kind::Number: {
      auto slash = e.text.find('/');
      mpz_class num(e.text.substr(0, slash));
      mpz_class den = slash == std::string::npos ? mpz_class(1) : mpz_class(e.text.substr(slash + 1));
      try {
        return P::constant(ring, ring->field().from_rational(num, den));
      } catch (const ArithmeticError&) {
        throw ParseError("denominator not invertible in " + ring->field().name(), e.line, e.column);
      }
    }
    case PolyExpr::Kind::Variable: {
      auto idx = ring->index_of(e.text);
      if (!idx) throw ParseError("unknown variable '" + e.text + "' in " + ring->description(), e.line, e.column);
      return P::variable(ring, *idx);
    }
    case PolyExpr::Kind::Sum: {
      P acc(ring);
      for (const auto& a : e.args) acc += evaluate(a, ring);
      return acc;
    }
    case PolyExpr::Kind::Product: {
      P acc = P::constant(ring, ring->field().one());
      for (const auto& a : e.args) acc *= evaluate(a, ring);
      return acc;
    }
    case PolyExpr::Kind::Power:
      return evaluate(e.args.at(0), ring).pow(e.exponent);
    case PolyExpr::Kind::Negate:
      return -evaluate(e.args.at(0), ring);
  }
  return P(ring);
}

template <CoefficientField F>
Polynomial<F> parse_polynomial(const RingPtr<F>& ring, std::string_view text) {
  return evaluate(parse_poly_expr(text), ring);
}

}  // namespace gts
