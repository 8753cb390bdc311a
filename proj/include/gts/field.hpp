#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gts {

class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Z/pZ for a prime p < 2^31. Elements are canonical representatives in [0, p).
class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint64_t p);

  std::uint32_t characteristic() const { return p_; }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem from_integer(const mpz_class& v) const {
    mpz_class r = v % p_;
    if (r < 0) r += p_;
    return static_cast<Elem>(r.get_ui());
  }
  /// num/den reduced into the field; throws if den vanishes mod p.
  Elem from_rational(const mpz_class& num, const mpz_class& den) const {
    return mul(from_integer(num), inv(from_integer(den)));
  }

  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem inv(Elem a) const;

  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool equal(Elem a, Elem b) const { return a == b; }
  std::string to_string(Elem a) const { return std::to_string(a); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

/// The rationals, backed by GMP rationals kept in lowest terms.
class RationalField {
 public:
  using Elem = mpq_class;

  std::uint32_t characteristic() const { return 0; }
  std::string name() const { return "QQ"; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }
  Elem from_integer(const mpz_class& v) const { return Elem(v); }
  Elem from_rational(const mpz_class& num, const mpz_class& den) const {
    if (den == 0) throw ArithmeticError("division by zero");
    Elem r(num, den);
    r.canonicalize();
    return r;
  }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw ArithmeticError("inverse of zero");
    return 1 / a;
  }

  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  std::string to_string(const Elem& a) const { return a.get_str(); }

  bool operator==(const RationalField&) const { return true; }
};

template <class F>
concept CoefficientField = requires(const F f, const typename F::Elem a, long long n) {
  { f.zero() } -> std::convertible_to<typename F::Elem>;
  { f.add(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.mul(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.inv(a) } -> std::convertible_to<typename F::Elem>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.from_int(n) } -> std::convertible_to<typename F::Elem>;
  { f.characteristic() } -> std::convertible_to<std::uint32_t>;
};

bool is_prime(std::uint64_t n);

/// C(n, k) reduced into the field. Throws std::out_of_range unless 0 <= k <= n.
template <CoefficientField F>
typename F::Elem binomial_in_field(long n, long k, const F& field) {
  if (n < 0 || k < 0 || k > n) throw std::out_of_range("binomial_in_field: k outside [0, n]");
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return field.from_integer(c);
}

}  // namespace gts
