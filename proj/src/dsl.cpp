#include "gts/dsl.hpp"

#include <map>
#include <set>

namespace gts::dsl {

std::string to_string(QueryKind k) {
  switch (k) {
    case QueryKind::Canonical: return "canonical";
    case QueryKind::Injective: return "injective";
    case QueryKind::Surjective: return "surjective";
    case QueryKind::BaseChange: return "basechange";
    case QueryKind::SymPower: return "sympower";
    case QueryKind::Wedge: return "wedge";
    case QueryKind::Obstruction: return "obstruction";
    case QueryKind::Oracle: return "oracle";
    case QueryKind::Present: return "present";
  }
  return "?";
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<const Query*> Script::queries() const {
  std::vector<const Query*> out;
  for (const auto& s : statements)
    if (const auto* q = std::get_if<Query>(&s)) out.push_back(q);
  return out;
}

namespace {

enum class SymKind { Field, Ring, Ideal, Module, Grading };

const char* kind_name(SymKind k) {
  switch (k) {
    case SymKind::Field: return "field";
    case SymKind::Ring: return "ring";
    case SymKind::Ideal: return "ideal";
    case SymKind::Module: return "module";
    case SymKind::Grading: return "grading";
  }
  return "?";
}

struct Symbol {
  SymKind kind;
  std::vector<std::string> variables;  // rings
  std::string ring;                    // ideals, modules, gradings
};

const std::set<std::string> kReserved{"GF", "QQ", "coker", "grade", "in", "field", "ring", "ideal", "extend",
                                      "module", "grading", "check", "oracle", "present"};

class Parser {
 public:
  explicit Parser(std::string_view src) : c_(tokenize(src)) {}

  Script run() {
    Script s;
    while (!c_.at_end()) s.statements.push_back(statement());
    return s;
  }

 private:
  static Pos pos_of(const Token& t) { return {t.line, t.column}; }

  [[noreturn]] static void error_at(const Token& t, const std::string& msg) { throw ParseError(msg, t.line, t.column); }

  Statement statement() {
    const Token& head = c_.peek();
    if (head.kind != Token::Kind::Identifier) c_.fail("expected a declaration or query");
    Statement out;
    if (head.text == "field")
      out = field_decl();
    else if (head.text == "ring")
      out = ring_decl();
    else if (head.text == "ideal")
      out = ideal_decl();
    else if (head.text == "extend")
      out = extend_decl();
    else if (head.text == "module")
      out = module_decl();
    else if (head.text == "grading")
      out = grading_decl();
    else if (head.text == "check" || head.text == "oracle" || head.text == "present")
      out = query();
    else
      error_at(head, "unknown statement '" + head.text + "'");
    c_.expect_symbol(";");
    return out;
  }

  const Token& new_name() {
    const Token& t = c_.expect_identifier("a name");
    if (kReserved.count(t.text)) error_at(t, "'" + t.text + "' is a reserved word");
    if (symbols_.count(t.text)) error_at(t, "'" + t.text + "' is already declared");
    return t;
  }

  const Symbol& lookup(const Token& t, SymKind kind) {
    auto it = symbols_.find(t.text);
    if (it == symbols_.end()) error_at(t, "undeclared " + std::string(kind_name(kind)) + " '" + t.text + "'");
    if (it->second.kind != kind)
      error_at(t, "'" + t.text + "' is a " + kind_name(it->second.kind) + ", expected a " + kind_name(kind));
    return it->second;
  }

  FieldSpec field_spec() {
    const Token& t = c_.expect_identifier("a field");
    FieldSpec f;
    if (t.text == "QQ") {
      f.kind = FieldSpec::Kind::Rational;
    } else if (t.text == "GF") {
      c_.expect_symbol("(");
      const Token& num = c_.peek();
      f.kind = FieldSpec::Kind::Prime;
      f.modulus = c_.expect_integer("a prime modulus");
      if (!is_prime(f.modulus)) error_at(num, "modulus not prime: " + std::to_string(f.modulus));
      if (f.modulus >= (1L << 31)) error_at(num, "modulus too large: " + std::to_string(f.modulus));
      c_.expect_symbol(")");
    } else {
      lookup(t, SymKind::Field);
      f.kind = FieldSpec::Kind::Named;
      f.name = t.text;
    }
    return f;
  }

  std::vector<std::string> variable_list(std::vector<std::string> existing) {
    std::vector<std::string> added;
    c_.expect_symbol("[");
    if (!c_.is_symbol("]")) {
      do {
        const Token& v = c_.expect_identifier("a variable name");
        if (kReserved.count(v.text)) error_at(v, "'" + v.text + "' is a reserved word");
        for (const auto& e : existing)
          if (e == v.text) error_at(v, "variable '" + v.text + "' already present");
        existing.push_back(v.text);
        added.push_back(v.text);
      } while (c_.accept_symbol(","));
    }
    c_.expect_symbol("]");
    return added;
  }

  void check_variables(const PolyExpr& e, const std::vector<std::string>& vars, const std::string& ring) {
    std::vector<const PolyExpr*> used;
    collect_variables(e, used);
    for (const auto* v : used) {
      bool ok = false;
      for (const auto& name : vars) ok = ok || name == v->text;
      if (!ok) throw ParseError("unknown variable '" + v->text + "' in ring " + ring, v->line, v->column);
    }
  }

  std::vector<PolyExpr> poly_list(std::string_view open, std::string_view close) {
    std::vector<PolyExpr> out;
    c_.expect_symbol(open);
    if (!c_.is_symbol(close)) {
      do out.push_back(parse_poly_expr(c_));
      while (c_.accept_symbol(","));
    }
    c_.expect_symbol(close);
    return out;
  }

  /// After '/': a parenthesized list or an ideal name declared in `ring`.
  IdealRef ideal_ref(const std::string& ring, const std::vector<std::string>& vars) {
    IdealRef r;
    if (c_.is_symbol("(")) {
      r.generators = poly_list("(", ")");
      for (const auto& g : r.generators) check_variables(g, vars, ring);
      return r;
    }
    const Token& t = c_.expect_identifier("an ideal or '('");
    const Symbol& s = lookup(t, SymKind::Ideal);
    if (s.ring != ring) error_at(t, "ideal '" + t.text + "' belongs to ring " + s.ring + ", not " + ring);
    r.name = t.text;
    return r;
  }

  FieldDecl field_decl() {
    const Token& kw = c_.next();
    FieldDecl d;
    d.pos = pos_of(kw);
    const Token& name = new_name();
    d.name = name.text;
    c_.expect_symbol("=");
    d.field = field_spec();
    if (d.field.kind == FieldSpec::Kind::Named) error_at(name, "a field must be GF(p) or QQ");
    symbols_[d.name] = {SymKind::Field, {}, {}};
    return d;
  }

  RingDecl ring_decl() {
    const Token& kw = c_.next();
    RingDecl d;
    d.pos = pos_of(kw);
    d.name = new_name().text;
    c_.expect_symbol("=");
    const Token& t = c_.peek();
    bool quotient_form = t.kind == Token::Kind::Identifier && symbols_.count(t.text) &&
                         symbols_.at(t.text).kind == SymKind::Ring;
    std::vector<std::string> vars;
    if (quotient_form) {
      c_.next();
      d.base = t.text;
      vars = symbols_.at(t.text).variables;
      c_.expect_symbol("/");
      d.quotient = ideal_ref(d.base, vars);
    } else {
      d.field = field_spec();
      d.variables = variable_list({});
      if (d.variables.empty()) error_at(t, "a polynomial ring needs at least one variable");
      vars = d.variables;
    }
    symbols_[d.name] = {SymKind::Ring, vars, {}};
    return d;
  }

  IdealDecl ideal_decl() {
    const Token& kw = c_.next();
    IdealDecl d;
    d.pos = pos_of(kw);
    d.name = new_name().text;
    c_.expect_symbol("=");
    d.generators = poly_list("(", ")");
    c_.expect_word("in");
    const Token& r = c_.expect_identifier("a ring");
    const Symbol& ring = lookup(r, SymKind::Ring);
    d.ring = r.text;
    for (const auto& g : d.generators) check_variables(g, ring.variables, d.ring);
    symbols_[d.name] = {SymKind::Ideal, {}, d.ring};
    return d;
  }

  ExtendDecl extend_decl() {
    const Token& kw = c_.next();
    ExtendDecl d;
    d.pos = pos_of(kw);
    d.name = new_name().text;
    c_.expect_symbol("=");
    const Token& src = c_.expect_identifier("a ring");
    auto vars = lookup(src, SymKind::Ring).variables;
    d.source = src.text;
    if (c_.is_symbol("[")) {
      d.new_variables = variable_list(vars);
      vars.insert(vars.end(), d.new_variables.begin(), d.new_variables.end());
    }
    if (c_.accept_symbol("/")) {
      // named ideals live in the source ring, so only the source variables are allowed there
      if (c_.is_symbol("("))
        d.quotient = ideal_ref(d.name, vars);
      else
        d.quotient = ideal_ref(d.source, vars);
    }
    symbols_[d.name] = {SymKind::Ring, vars, {}};
    extensions_.insert({d.source, d.name});
    return d;
  }

  ModuleDecl module_decl() {
    const Token& kw = c_.next();
    ModuleDecl d;
    d.pos = pos_of(kw);
    d.name = new_name().text;
    c_.expect_symbol("=");
    if (c_.is_word("coker")) {
      c_.next();
      const Token& r = c_.expect_identifier("a ring");
      const auto& vars = lookup(r, SymKind::Ring).variables;
      d.ring = r.text;
      c_.expect_symbol("^");
      const Token& rk = c_.peek();
      long rank = c_.expect_integer("a rank");
      if (rank < 1) error_at(rk, "rank must be positive");
      d.rank = static_cast<std::size_t>(rank);
      if (c_.accept_symbol("/")) {
        c_.expect_symbol("[");
        if (!c_.is_symbol("]")) {
          do {
            const Token& row_start = c_.peek();
            std::vector<PolyExpr> row;
            do row.push_back(parse_poly_expr(c_));
            while (c_.accept_symbol(","));
            if (row.size() != d.rank)
              error_at(row_start, "relation has " + std::to_string(row.size()) + " entries, expected " +
                                      std::to_string(d.rank));
            for (const auto& e : row) check_variables(e, vars, d.ring);
            d.relations.push_back(std::move(row));
          } while (c_.accept_symbol(";"));
        }
        c_.expect_symbol("]");
      }
    } else {
      const Token& m = c_.expect_identifier("'coker' or a module");
      const Symbol& src = lookup(m, SymKind::Module);
      d.source_module = m.text;
      c_.expect_symbol("@");
      const Token& r = c_.expect_identifier("a ring");
      lookup(r, SymKind::Ring);
      if (!extensions_.count({src.ring, r.text}))
        error_at(r, "no extension from " + src.ring + " to " + r.text + " is declared");
      d.ring = r.text;
    }
    symbols_[d.name] = {SymKind::Module, {}, d.ring};
    return d;
  }

  GradingDecl grading_decl() {
    const Token& kw = c_.next();
    GradingDecl d;
    d.pos = pos_of(kw);
    d.name = new_name().text;
    c_.expect_symbol("=");
    c_.expect_word("grade");
    const Token& r = c_.expect_identifier("a ring");
    const auto& vars = lookup(r, SymKind::Ring).variables;
    d.ring = r.text;
    while (c_.is_symbol("(")) {
      const Token& open = c_.next();
      std::vector<long> w;
      do {
        bool neg = c_.accept_symbol("-");
        long x = c_.expect_integer("a weight");
        w.push_back(neg ? -x : x);
      } while (c_.accept_symbol(","));
      c_.expect_symbol(")");
      if (w[0] < 1) error_at(open, "the first weight of every variable must be positive");
      if (!d.weights.empty() && w.size() != d.weights.front().size()) error_at(open, "weight tuples of different lengths");
      d.weights.push_back(std::move(w));
    }
    if (d.weights.size() != vars.size())
      error_at(r, "grading gives " + std::to_string(d.weights.size()) + " weights for " + std::to_string(vars.size()) +
                      " variables");
    symbols_[d.name] = {SymKind::Grading, {}, d.ring};
    return d;
  }

  std::size_t degree_arg() {
    c_.expect_word("n");
    c_.expect_symbol("=");
    const Token& t = c_.peek();
    long n = c_.expect_integer("a tensor degree");
    if (n < 0) error_at(t, "tensor degree must be non-negative");
    return static_cast<std::size_t>(n);
  }

  std::string module_arg() {
    const Token& m = c_.expect_identifier("a module");
    lookup(m, SymKind::Module);
    return m.text;
  }

  Query query() {
    const Token& kw = c_.next();
    Query q;
    q.pos = pos_of(kw);
    if (kw.text == "oracle") {
      q.kind = QueryKind::Oracle;
      q.n = degree_arg();
      q.module = module_arg();
      if (c_.is_word("dmax")) {
        c_.next();
        c_.expect_symbol("=");
        const Token& t = c_.peek();
        long d = c_.expect_integer("a degree bound");
        if (d < 0) error_at(t, "dmax must be non-negative");
        q.dmax = static_cast<unsigned>(d);
      }
      if (c_.is_word("grading")) {
        c_.next();
        const Token& g = c_.expect_identifier("a grading");
        const Symbol& gs = lookup(g, SymKind::Grading);
        if (gs.ring != symbols_.at(q.module).ring)
          error_at(g, "grading " + g.text + " is on ring " + gs.ring + ", not " + symbols_.at(q.module).ring);
        q.grading = g.text;
      }
      return q;
    }
    if (kw.text == "present") {
      q.kind = QueryKind::Present;
      q.n = degree_arg();
      q.module = module_arg();
      return q;
    }
    const Token& what = c_.expect_identifier("a check kind");
    static const std::map<std::string, QueryKind> kinds{
        {"canonical", QueryKind::Canonical},   {"injective", QueryKind::Injective}, {"surjective", QueryKind::Surjective},
        {"basechange", QueryKind::BaseChange}, {"sympower", QueryKind::SymPower},   {"wedge", QueryKind::Wedge},
        {"obstruction", QueryKind::Obstruction}};
    auto it = kinds.find(what.text);
    if (it == kinds.end()) error_at(what, "unknown check '" + what.text + "'");
    q.kind = it->second;
    if (q.kind == QueryKind::Wedge || q.kind == QueryKind::Obstruction) {
      q.n = 2;
      q.module = module_arg();
      return q;
    }
    q.n = degree_arg();
    q.module = module_arg();
    if (q.kind == QueryKind::BaseChange) {
      c_.expect_symbol("@");
      const Token& r = c_.expect_identifier("a ring");
      lookup(r, SymKind::Ring);
      const auto& from = symbols_.at(q.module).ring;
      if (!extensions_.count({from, r.text})) error_at(r, "no extension from " + from + " to " + r.text + " is declared");
      q.target = r.text;
    }
    if (q.kind == QueryKind::SymPower) {
      c_.expect_word("k");
      c_.expect_symbol("=");
      do {
        const Token& t = c_.peek();
        long k = c_.expect_integer("a symmetric power");
        if (k < 0) error_at(t, "symmetric power must be non-negative");
        q.powers.push_back(static_cast<std::size_t>(k));
      } while (c_.accept_symbol(","));
    }
    return q;
  }

  TokenCursor c_;
  std::map<std::string, Symbol> symbols_;
  std::set<std::pair<std::string, std::string>> extensions_;
};

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

std::string print_exprs(const std::vector<PolyExpr>& es) {
  std::vector<std::string> xs;
  for (const auto& e : es) xs.push_back(to_string(e));
  return join(xs, ", ");
}

std::string print_field(const FieldSpec& f) {
  switch (f.kind) {
    case FieldSpec::Kind::Prime: return "GF(" + std::to_string(f.modulus) + ")";
    case FieldSpec::Kind::Rational: return "QQ";
    case FieldSpec::Kind::Named: return f.name;
  }
  return "?";
}

std::string print_ideal(const IdealRef& r) { return r.name.empty() ? "(" + print_exprs(r.generators) + ")" : r.name; }

struct Printer {
  std::string operator()(const FieldDecl& d) const { return "field " + d.name + " = " + print_field(d.field) + ";"; }
  std::string operator()(const RingDecl& d) const {
    if (d.field) return "ring " + d.name + " = " + print_field(*d.field) + "[" + join(d.variables, ", ") + "];";
    return "ring " + d.name + " = " + d.base + " / " + print_ideal(d.quotient) + ";";
  }
  std::string operator()(const IdealDecl& d) const {
    return "ideal " + d.name + " = (" + print_exprs(d.generators) + ") in " + d.ring + ";";
  }
  std::string operator()(const ExtendDecl& d) const {
    std::string s = "extend " + d.name + " = " + d.source;
    if (!d.new_variables.empty()) s += "[" + join(d.new_variables, ", ") + "]";
    if (d.quotient) s += " / " + print_ideal(*d.quotient);
    return s + ";";
  }
  std::string operator()(const ModuleDecl& d) const {
    if (!d.source_module.empty()) return "module " + d.name + " = " + d.source_module + " @ " + d.ring + ";";
    std::string s = "module " + d.name + " = coker " + d.ring + "^" + std::to_string(d.rank);
    if (!d.relations.empty()) {
      std::vector<std::string> rows;
      for (const auto& r : d.relations) rows.push_back(print_exprs(r));
      s += " / [" + join(rows, "; ") + "]";
    }
    return s + ";";
  }
  std::string operator()(const GradingDecl& d) const {
    std::string s = "grading " + d.name + " = grade " + d.ring;
    for (const auto& w : d.weights) {
      std::vector<std::string> xs;
      for (long x : w) xs.push_back(std::to_string(x));
      s += " (" + join(xs, ",") + ")";
    }
    return s + ";";
  }
  std::string operator()(const Query& q) const {
    std::string n = "n=" + std::to_string(q.n) + " ";
    switch (q.kind) {
      case QueryKind::Wedge:
      case QueryKind::Obstruction:
        return "check " + to_string(q.kind) + " " + q.module + ";";
      case QueryKind::Present:
        return "present " + n + q.module + ";";
      case QueryKind::Oracle: {
        std::string s = "oracle " + n + q.module;
        if (q.dmax) s += " dmax=" + std::to_string(*q.dmax);
        if (!q.grading.empty()) s += " grading " + q.grading;
        return s + ";";
      }
      case QueryKind::BaseChange:
        return "check basechange " + n + q.module + " @ " + q.target + ";";
      case QueryKind::SymPower: {
        std::vector<std::string> ks;
        for (auto k : q.powers) ks.push_back(std::to_string(k));
        return "check sympower " + n + q.module + " k=" + join(ks, ",") + ";";
      }
      default:
        return "check " + to_string(q.kind) + " " + n + q.module + ";";
    }
  }
};

}  // namespace

Script parse(std::string_view source) { return Parser(source).run(); }

std::string print(const Statement& s) { return std::visit(Printer{}, s); }

std::string print(const Script& s) {
  std::string out;
  for (const auto& st : s.statements) out += print(st) + "\n";
  return out;
}

}  // namespace gts::dsl
