#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gts {

// One slot beyond the 16 user variables the DSL admits is kept free for the
// elimination tag used by intersections; the rest is headroom for extensions.
inline constexpr std::size_t kMaxVars = 24;

class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(const std::vector<unsigned>& exps) {
    if (exps.size() > kMaxVars) throw std::length_error("too many variables in monomial");
    for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
  }

  static Monomial variable(std::size_t i, unsigned power = 1) {
    Monomial m;
    m.set(i, power);
    return m;
  }

  unsigned operator[](std::size_t i) const { return exp_[i]; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, unsigned e) {
    if (i >= kMaxVars) throw std::out_of_range("variable index beyond kMaxVars");
    if (e > 0xFFFFu) throw std::overflow_error("monomial exponent overflow");
    degree_ = degree_ - exp_[i] + e;
    exp_[i] = static_cast<Exponent>(e);
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      unsigned e = unsigned{exp_[i]} + o.exp_[i];
      if (e > 0xFFFFu) throw std::overflow_error("monomial exponent overflow");
      r.exp_[i] = static_cast<Exponent>(e);
    }
    r.degree_ = degree_ + o.degree_;
    return r;
  }

  bool divides(const Monomial& o) const {
    if (degree_ > o.degree_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp_[i] > o.exp_[i]) return false;
    return true;
  }

  /// o / *this; requires divides(o).
  Monomial quotient_of(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = static_cast<Exponent>(o.exp_[i] - exp_[i]);
    r.degree_ = o.degree_ - degree_;
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      r.exp_[i] = std::max(exp_[i], o.exp_[i]);
      r.degree_ += r.exp_[i];
    }
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp_[i] && o.exp_[i]) return false;
    return true;
  }

  /// Bit i set iff variable i (mod 32) occurs; used as a quick divisibility filter.
  std::uint32_t support_mask() const {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp_[i]) m |= 1u << (i % 32);
    return m;
  }

  bool operator==(const Monomial& o) const = default;

  std::size_t hash() const {
    std::size_t h = degree_;
    for (auto e : exp_) h = h * 1000003u + e;
    return h;
  }

 private:
  std::array<Exponent, kMaxVars> exp_{};
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class MonomialOrder { DegRevLex, DegLex, Lex };

std::string to_string(MonomialOrder o);
MonomialOrder parse_monomial_order(const std::string& s);

/// Three-way comparison: positive when a > b under the order.
inline int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  switch (order) {
    case MonomialOrder::DegRevLex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      for (std::size_t i = kMaxVars; i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      return 0;
    case MonomialOrder::DegLex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      [[fallthrough]];
    case MonomialOrder::Lex:
      for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
  }
  return 0;
}

/// Canonical storage order used inside Polynomial: descending degrevlex.
struct CanonicalMonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare(a, b, MonomialOrder::DegRevLex) > 0;
  }
};

}  // namespace gts
