#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gts/field.hpp"
#include "gts/monomial.hpp"

namespace gts {

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// k[x_1..x_d]; immutable once built and shared by every polynomial over it.
template <CoefficientField F>
class PolyRing {
 public:
  using FieldType = F;

  PolyRing(F field, std::vector<std::string> variables)
      : field_(std::move(field)), vars_(std::move(variables)) {
    if (vars_.size() >= kMaxVars)
      throw std::length_error("polynomial ring with " + std::to_string(vars_.size()) +
                              " variables exceeds the supported maximum");
  }

  const F& field() const { return field_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
  }

  std::string description() const {
    std::string s = field_.name() + "[";
    for (std::size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_[i];
    return s + "]";
  }

 private:
  F field_;
  std::vector<std::string> vars_;
};

template <CoefficientField F>
using RingPtr = std::shared_ptr<const PolyRing<F>>;

template <CoefficientField F>
RingPtr<F> make_ring(F field, std::vector<std::string> variables) {
  return std::make_shared<const PolyRing<F>>(std::move(field), std::move(variables));
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars);

/// Sparse polynomial: terms held in descending degrevlex order, no zero coefficients.
template <CoefficientField F>
class Polynomial {
 public:
  using Elem = typename F::Elem;
  using Term = std::pair<Monomial, Elem>;

  Polynomial() = default;
  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr<F> ring, const Elem& c) {
    return monomial(std::move(ring), Monomial{}, c);
  }
  static Polynomial constant(RingPtr<F> ring, long long c) {
    auto e = ring->field().from_int(c);
    return constant(std::move(ring), e);
  }
  static Polynomial variable(RingPtr<F> ring, std::size_t i) {
    if (i >= ring->nvars()) throw std::out_of_range("variable index out of range");
    auto one = ring->field().one();
    return monomial(std::move(ring), Monomial::variable(i), one);
  }
  static Polynomial monomial(RingPtr<F> ring, const Monomial& m, const Elem& c) {
    Polynomial p(std::move(ring));
    if (!p.field().is_zero(c)) p.terms_.emplace_back(m, c);
    return p;
  }
  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(RingPtr<F> ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
      return CanonicalMonomialGreater{}(a.first, b.first);
    });
    const F& f = p.field();
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second = f.add(p.terms_.back().second, t.second);
        if (f.is_zero(p.terms_.back().second)) p.terms_.pop_back();
      } else if (!f.is_zero(t.second)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

  /// -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.first.degree()));
    return d;
  }

  Elem coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.first == m) return t.second;
    return field().zero();
  }

  Polynomial operator+(const Polynomial& o) const { return combine(o, false); }
  Polynomial operator-(const Polynomial& o) const { return combine(o, true); }
  Polynomial operator-() const {
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) r.terms_.emplace_back(m, field().neg(c));
    return r;
  }
  Polynomial operator*(const Polynomial& o) const {
    check_ring(o);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& [m1, c1] : terms_)
      for (const auto& [m2, c2] : o.terms_) prod.emplace_back(m1 * m2, field().mul(c1, c2));
    return from_terms(ring_, std::move(prod));
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Elem& c) const {
    Polynomial r(ring_);
    if (field().is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [m, a] : terms_) r.terms_.emplace_back(m, field().mul(a, c));
    return r;
  }
  Polynomial times_monomial(const Monomial& mono, const Elem& c) const {
    Polynomial r(ring_);
    if (field().is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    // multiplying by a monomial preserves any monomial order
    for (const auto& [m, a] : terms_) r.terms_.emplace_back(m * mono, field().mul(a, c));
    return r;
  }
  Polynomial pow(unsigned e) const {
    Polynomial result = constant(ring_, field().one());
    Polynomial base = *this;
    while (e) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return result;
  }

  bool operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (!(terms_[i].first == o.terms_[i].first) || !field().equal(terms_[i].second, o.terms_[i].second))
        return false;
    return true;
  }

  /// `+`-separated terms, `*`-separated powers, e.g. `y2*z1 + x1*z2`.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    const auto& vars = ring_->variables();
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const auto& [m, c] = terms_[i];
      std::string coef = field().to_string(c);
      bool negative = !coef.empty() && coef[0] == '-';
      if (negative) coef.erase(0, 1);
      if (i == 0)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      if (m.is_one()) {
        out += coef;
      } else {
        if (coef != "1") out += coef + "*";
        out += monomial_to_string(m, vars);
      }
    }
    return out;
  }

 private:
  void check_ring(const Polynomial& o) const {
    if (ring_ != o.ring_ && !(ring_ && o.ring_ && ring_->variables() == o.ring_->variables() &&
                              ring_->field() == o.ring_->field()))
      throw RingMismatch("polynomials belong to different rings");
  }

  Polynomial combine(const Polynomial& o, bool subtract) const {
    check_ring(o);
    const F& f = field();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    CanonicalMonomialGreater greater;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && greater(terms_[i].first, o.terms_[j].first))) {
        r.terms_.push_back(terms_[i++]);
      } else if (i == terms_.size() || greater(o.terms_[j].first, terms_[i].first)) {
        const auto& [m, c] = o.terms_[j++];
        r.terms_.emplace_back(m, subtract ? f.neg(c) : c);
      } else {
        Elem c = subtract ? f.sub(terms_[i].second, o.terms_[j].second)
                          : f.add(terms_[i].second, o.terms_[j].second);
        if (!f.is_zero(c)) r.terms_.emplace_back(terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  RingPtr<F> ring_;
  std::vector<Term> terms_;
};

/// Maximal term of a nonzero polynomial under `order`.
template <CoefficientField F>
std::pair<Monomial, typename F::Elem> leading_term(const Polynomial<F>& p,
                                                   MonomialOrder order = MonomialOrder::DegRevLex) {
  if (p.is_zero()) throw std::invalid_argument("leading_term of the zero polynomial");
  const auto* best = &p.terms().front();
  for (const auto& t : p.terms())
    if (compare(t.first, best->first, order) > 0) best = &t;
  return *best;
}

/// Weight vector in Z^g per variable.
struct Grading {
  std::vector<std::vector<long>> weights;

  static Grading standard(std::size_t nvars) {
    return Grading{std::vector<std::vector<long>>(nvars, std::vector<long>{1})};
  }
  std::size_t rank() const { return weights.empty() ? 1 : weights.front().size(); }
  std::vector<long> degree_of(const Monomial& m) const {
    std::vector<long> d(rank(), 0);
    for (std::size_t v = 0; v < weights.size(); ++v)
      for (std::size_t k = 0; k < d.size(); ++k) d[k] += static_cast<long>(m[v]) * weights[v][k];
    return d;
  }
};

struct Multidegree {
  enum class Kind { Homogeneous, Inhomogeneous, Zero } kind;
  std::vector<long> degree;  // meaningful for Homogeneous only
};

template <CoefficientField F>
Multidegree multidegree(const Polynomial<F>& p, const Grading& g) {
  if (p.is_zero()) return {Multidegree::Kind::Zero, {}};
  auto d = g.degree_of(p.terms().front().first);
  for (const auto& t : p.terms())
    if (g.degree_of(t.first) != d) return {Multidegree::Kind::Inhomogeneous, {}};
  return {Multidegree::Kind::Homogeneous, d};
}

/// Ring map k[x] -> k[y] given by images of the source variables.
template <CoefficientField F>
Polynomial<F> substitute(const Polynomial<F>& p, const RingPtr<F>& target,
                         const std::vector<Polynomial<F>>& images) {
  if (images.size() != p.ring()->nvars())
    throw std::invalid_argument("substitute: one image per source variable required");
  Polynomial<F> result(target);
  for (const auto& [m, c] : p.terms()) {
    Polynomial<F> term = Polynomial<F>::constant(target, c);
    for (std::size_t v = 0; v < images.size(); ++v)
      if (m[v]) term = term * images[v].pow(m[v]);
    result += term;
  }
  return result;
}

}  // namespace gts
