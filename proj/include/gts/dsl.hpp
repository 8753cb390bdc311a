#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gts/expr.hpp"

namespace gts::dsl {

struct Pos {
  std::size_t line = 0, column = 0;
};

/// GF(p) or QQ, or a reference to a declared field.
struct FieldSpec {
  enum class Kind { Prime, Rational, Named } kind = Kind::Rational;
  long modulus = 0;
  std::string name;

  bool operator==(const FieldSpec&) const = default;
};

struct FieldDecl {
  std::string name;
  FieldSpec field;
  Pos pos;
  bool operator==(const FieldDecl& o) const { return name == o.name && field == o.field; }
};

/// Right-hand side `/ (f, ...)` or `/ I`.
struct IdealRef {
  std::string name;
  std::vector<PolyExpr> generators;
  bool operator==(const IdealRef&) const = default;
};

/// `ring A = k[s,t];` or `ring B = A / (...);`
struct RingDecl {
  std::string name;
  std::optional<FieldSpec> field;  // polynomial ring form
  std::vector<std::string> variables;
  std::string base;                // quotient form
  IdealRef quotient;
  Pos pos;
  bool operator==(const RingDecl& o) const {
    return name == o.name && field == o.field && variables == o.variables && base == o.base && quotient == o.quotient;
  }
};

struct IdealDecl {
  std::string name;
  std::string ring;
  std::vector<PolyExpr> generators;
  Pos pos;
  bool operator==(const IdealDecl& o) const { return name == o.name && ring == o.ring && generators == o.generators; }
};

/// `extend A' = A[z] / (...);`, `extend A' = A / I;`, `extend A' = A[u];`
struct ExtendDecl {
  std::string name;
  std::string source;
  std::vector<std::string> new_variables;
  std::optional<IdealRef> quotient;
  Pos pos;
  bool operator==(const ExtendDecl& o) const {
    return name == o.name && source == o.source && new_variables == o.new_variables && quotient == o.quotient;
  }
};

/// `module M = coker A^m / [v1; v2];` or `module M' = M @ A';`
struct ModuleDecl {
  std::string name;
  std::string ring;
  std::size_t rank = 0;
  std::vector<std::vector<PolyExpr>> relations;
  std::string source_module;  // base change form
  Pos pos;
  bool operator==(const ModuleDecl& o) const {
    return name == o.name && ring == o.ring && rank == o.rank && relations == o.relations &&
           source_module == o.source_module;
  }
};

/// `grading G = grade A (1,1) (1,2);` with one weight tuple per variable.
struct GradingDecl {
  std::string name;
  std::string ring;
  std::vector<std::vector<long>> weights;
  Pos pos;
  bool operator==(const GradingDecl& o) const { return name == o.name && ring == o.ring && weights == o.weights; }
};

enum class QueryKind { Canonical, Injective, Surjective, BaseChange, SymPower, Wedge, Obstruction, Oracle, Present };

std::string to_string(QueryKind k);

struct Query {
  QueryKind kind = QueryKind::Canonical;
  std::size_t n = 0;
  std::string module;
  std::string target;              // basechange
  std::vector<std::size_t> powers;  // sympower
  std::optional<unsigned> dmax;    // oracle
  std::string grading;             // oracle
  Pos pos;
  bool operator==(const Query& o) const {
    return kind == o.kind && n == o.n && module == o.module && target == o.target && powers == o.powers &&
           dmax == o.dmax && grading == o.grading;
  }
};

using Statement = std::variant<FieldDecl, RingDecl, IdealDecl, ExtendDecl, ModuleDecl, GradingDecl, Query>;

struct Script {
  std::vector<Statement> statements;
  bool operator==(const Script&) const = default;

  std::vector<const Query*> queries() const;
};

/// Parses and resolves names; the first problem is reported as a ParseError with its position.
Script parse(std::string_view source);

/// One statement per line; parse(print(s)) == s.
std::string print(const Script& s);
std::string print(const Statement& s);

bool is_prime(long p);

}  // namespace gts::dsl
