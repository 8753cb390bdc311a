#include "gts/expr.hpp"

#include <cctype>

namespace gts {

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      while (j < src.size() && src[j] == '\'') ++j;
      t.kind = Token::Kind::Identifier;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Token::Kind::Integer;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (std::string_view("+-*/^()[],;=@:<>{}").find(c) != std::string_view::npos) {
      t.kind = Token::Kind::Symbol;
      t.text = std::string(1, c);
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

void TokenCursor::fail(const std::string& message) const {
  const Token& t = peek();
  std::string found = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
  throw ParseError(message + " (found " + found + ")", t.line, t.column);
}

const Token& TokenCursor::expect_symbol(std::string_view s) {
  if (!is_symbol(s)) fail("expected '" + std::string(s) + "'");
  return next();
}

const Token& TokenCursor::expect_identifier(std::string_view what) {
  if (peek().kind != Token::Kind::Identifier) fail("expected " + std::string(what));
  return next();
}

const Token& TokenCursor::expect_word(std::string_view word) {
  if (!is_word(word)) fail("expected '" + std::string(word) + "'");
  return next();
}

long TokenCursor::expect_integer(std::string_view what) {
  if (peek().kind != Token::Kind::Integer) fail("expected " + std::string(what));
  const Token& t = next();
  try {
    return std::stol(t.text);
  } catch (const std::out_of_range&) {
    throw ParseError("integer literal out of range", t.line, t.column);
  }
}

namespace {

PolyExpr parse_sum(TokenCursor& c);

PolyExpr parse_atom(TokenCursor& c) {
  const Token& t = c.peek();
  PolyExpr e;
  e.line = t.line;
  e.column = t.column;
  if (t.kind == Token::Kind::Integer) {
    e.kind = PolyExpr::Kind::Number;
    e.text = c.next().text;
    if (c.is_symbol("/")) {
      c.next();
      if (c.peek().kind != Token::Kind::Integer) c.fail("expected integer denominator");
      e.text += "/" + c.next().text;
    }
    return e;
  }
  if (t.kind == Token::Kind::Identifier) {
    e.kind = PolyExpr::Kind::Variable;
    e.text = c.next().text;
    return e;
  }
  if (c.accept_symbol("(")) {
    PolyExpr inner = parse_sum(c);
    c.expect_symbol(")");
    return inner;
  }
  c.fail("expected a number, variable or '('");
}

PolyExpr parse_factor(TokenCursor& c) {
  PolyExpr base = parse_atom(c);
  if (c.is_symbol("^")) {
    const Token& caret = c.next();
    long e = c.expect_integer("exponent");
    if (e < 0) throw ParseError("negative exponent", caret.line, caret.column);
    PolyExpr p;
    p.kind = PolyExpr::Kind::Power;
    p.exponent = static_cast<unsigned>(e);
    p.line = base.line;
    p.column = base.column;
    p.args.push_back(std::move(base));
    return p;
  }
  return base;
}

PolyExpr parse_product(TokenCursor& c) {
  PolyExpr first = parse_factor(c);
  if (!c.is_symbol("*")) return first;
  PolyExpr prod;
  prod.kind = PolyExpr::Kind::Product;
  prod.line = first.line;
  prod.column = first.column;
  prod.args.push_back(std::move(first));
  while (c.accept_symbol("*")) prod.args.push_back(parse_factor(c));
  return prod;
}

PolyExpr negate(PolyExpr e) {
  PolyExpr n;
  n.kind = PolyExpr::Kind::Negate;
  n.line = e.line;
  n.column = e.column;
  n.args.push_back(std::move(e));
  return n;
}

PolyExpr parse_sum(TokenCursor& c) {
  std::vector<PolyExpr> terms;
  bool neg = c.accept_symbol("-");
  terms.push_back(neg ? negate(parse_product(c)) : parse_product(c));
  while (c.is_symbol("+") || c.is_symbol("-")) {
    bool minus = c.next().text == "-";
    PolyExpr t = parse_product(c);
    terms.push_back(minus ? negate(std::move(t)) : std::move(t));
  }
  if (terms.size() == 1) return std::move(terms.front());
  PolyExpr s;
  s.kind = PolyExpr::Kind::Sum;
  s.line = terms.front().line;
  s.column = terms.front().column;
  s.args = std::move(terms);
  return s;
}

bool is_atomic(const PolyExpr& e) {
  return e.kind == PolyExpr::Kind::Variable ||
         (e.kind == PolyExpr::Kind::Number && e.text.find('/') == std::string::npos);
}

std::string wrap_if(const PolyExpr& e, bool parens) {
  return parens ? "(" + to_string(e) + ")" : to_string(e);
}

}  // namespace

PolyExpr parse_poly_expr(TokenCursor& cursor) { return parse_sum(cursor); }

PolyExpr parse_poly_expr(std::string_view text) {
  TokenCursor c(tokenize(text));
  PolyExpr e = parse_sum(c);
  if (!c.at_end()) c.fail("unexpected trailing input");
  return e;
}

std::string to_string(const PolyExpr& e) {
  using K = PolyExpr::Kind;
  auto neg_inner = [](const PolyExpr& inner) {
    return wrap_if(inner, inner.kind == K::Sum || inner.kind == K::Negate);
  };
  switch (e.kind) {
    case K::Number:
    case K::Variable:
      return e.text;
    case K::Power:
      return wrap_if(e.args[0], !is_atomic(e.args[0])) + "^" + std::to_string(e.exponent);
    case K::Product: {
      std::string s;
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) s += "*";
        auto k = e.args[i].kind;
        s += wrap_if(e.args[i], k == K::Sum || k == K::Negate || k == K::Product);
      }
      return s;
    }
    case K::Sum: {
      std::string s;
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        const PolyExpr& a = e.args[i];
        if (a.kind == K::Negate)
          s += (i ? " - " : "-") + neg_inner(a.args[0]);
        else
          s += (i ? " + " : "") + wrap_if(a, a.kind == K::Sum);
      }
      return s;
    }
    case K::Negate:
      return "-" + neg_inner(e.args[0]);
  }
  return {};
}

void collect_variables(const PolyExpr& e, std::vector<const PolyExpr*>& out) {
  if (e.kind == PolyExpr::Kind::Variable) out.push_back(&e);
  for (const auto& a : e.args) collect_variables(a, out);
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (!m[v]) continue;
    if (!s.empty()) s += "*";
    s += v < vars.size() ? vars[v] : "_t" + std::to_string(v);
    if (m[v] > 1) s += "^" + std::to_string(m[v]);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(MonomialOrder o) {
  switch (o) {
    case MonomialOrder::DegRevLex: return "degrevlex";
    case MonomialOrder::DegLex: return "deglex";
    case MonomialOrder::Lex: return "lex";
  }
  return "?";
}

MonomialOrder parse_monomial_order(const std::string& s) {
  if (s == "degrevlex" || s == "grevlex") return MonomialOrder::DegRevLex;
  if (s == "deglex" || s == "glex") return MonomialOrder::DegLex;
  if (s == "lex") return MonomialOrder::Lex;
  throw std::invalid_argument("unknown monomial order '" + s + "'");
}

}  // namespace gts
