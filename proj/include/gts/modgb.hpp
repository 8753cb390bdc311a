#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gts/polynomial.hpp"

namespace gts {

/// Module monomial order on terms x^a * e_i.
///
/// Default is term-over-position with degrevlex on monomials and the lowest
/// position largest. Two refinements are used internally: an elimination
/// variable compared before anything else (tag-variable intersection), and a
/// position block whose positions dominate all later ones (syzygies, preimages).
struct ModuleOrder {
  MonomialOrder monomial = MonomialOrder::DegRevLex;
  bool position_over_term = false;
  int elimination_variable = -1;
  std::uint32_t position_block = 0;

  bool operator==(const ModuleOrder&) const = default;
  std::string description() const;
};

/// Positive when (a, pa) > (b, pb).
inline int compare_terms(const Monomial& a, std::uint32_t pa, const Monomial& b, std::uint32_t pb,
                         const ModuleOrder& o) {
  if (o.position_block) {
    bool ba = pa < o.position_block, bb = pb < o.position_block;
    if (ba != bb) return ba ? 1 : -1;
  }
  if (o.elimination_variable >= 0) {
    unsigned ea = a[static_cast<std::size_t>(o.elimination_variable)];
    unsigned eb = b[static_cast<std::size_t>(o.elimination_variable)];
    if (ea != eb) return ea > eb ? 1 : -1;
  }
  if (o.position_over_term && pa != pb) return pa < pb ? 1 : -1;
  if (int c = compare(a, b, o.monomial)) return c;
  if (pa != pb) return pa < pb ? 1 : -1;
  return 0;
}

template <CoefficientField F>
struct ModTerm {
  Monomial mono;
  std::uint32_t pos = 0;
  typename F::Elem coef;
};

/// Flat term list sorted descending under some ModuleOrder; the GB engine's working type.
template <CoefficientField F>
using ModPoly = std::vector<ModTerm<F>>;

/// Counters for the Gröbner engine, accumulated per thread.
struct GbStats {
  std::size_t runs = 0;
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t basis_elements = 0;

  GbStats& operator+=(const GbStats& o) {
    runs += o.runs;
    pairs_created += o.pairs_created;
    pairs_reduced += o.pairs_reduced;
    zero_reductions += o.zero_reductions;
    basis_elements += o.basis_elements;
    return *this;
  }
};
GbStats& thread_gb_stats();

/// Element of the free module R^rank, stored as a coordinate vector.
template <CoefficientField F>
class ModElement {
 public:
  using Poly = Polynomial<F>;

  ModElement() = default;
  ModElement(RingPtr<F> ring, std::size_t rank) : ring_(std::move(ring)), coords_(rank, Poly(ring_)) {}
  ModElement(RingPtr<F> ring, std::vector<Poly> coords) : ring_(std::move(ring)), coords_(std::move(coords)) {}

  static ModElement unit(RingPtr<F> ring, std::size_t rank, std::size_t i) {
    ModElement v(ring, rank);
    v.coords_.at(i) = Poly::constant(ring, ring->field().one());
    return v;
  }

  const RingPtr<F>& ring() const { return ring_; }
  std::size_t rank() const { return coords_.size(); }
  const Poly& operator[](std::size_t i) const { return coords_[i]; }
  Poly& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Poly>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (!c.is_zero()) return false;
    return true;
  }

  ModElement operator+(const ModElement& o) const { return zip(o, false); }
  ModElement operator-(const ModElement& o) const { return zip(o, true); }
  ModElement operator-() const {
    ModElement r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
  }
  ModElement& operator+=(const ModElement& o) { return *this = *this + o; }
  ModElement& operator-=(const ModElement& o) { return *this = *this - o; }
  ModElement scaled(const Poly& a) const {
    ModElement r = *this;
    for (auto& c : r.coords_) c = c * a;
    return r;
  }
  bool operator==(const ModElement& o) const { return coords_ == o.coords_; }

  /// `(p1, p2, ...)`
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? ", " : "") + coords_[i].to_string();
    return s + ")";
  }

  /// Total degree of the lowest-degree term; -1 for zero.
  int min_degree() const {
    int d = -1;
    for (const auto& c : coords_)
      for (const auto& t : c.terms())
        if (d < 0 || static_cast<int>(t.first.degree()) < d) d = static_cast<int>(t.first.degree());
    return d;
  }

 private:
  ModElement zip(const ModElement& o, bool subtract) const {
    if (rank() != o.rank()) throw std::invalid_argument("module elements of different rank");
    ModElement r = *this;
    for (std::size_t i = 0; i < coords_.size(); ++i)
      r.coords_[i] = subtract ? coords_[i] - o.coords_[i] : coords_[i] + o.coords_[i];
    return r;
  }

  RingPtr<F> ring_;
  std::vector<Poly> coords_;
};

namespace detail {

template <CoefficientField F>
ModPoly<F> to_modpoly(const ModElement<F>& v, const ModuleOrder& order);

template <CoefficientField F>
ModElement<F> from_modpoly(const RingPtr<F>& ring, std::size_t rank, const ModPoly<F>& p);

/// Reduced Gröbner basis, monic, sorted ascending by leading term.
template <CoefficientField F>
std::vector<ModPoly<F>> groebner_basis(const F& field, std::vector<ModPoly<F>> generators,
                                       const ModuleOrder& order, bool ideal_case);

/// Fully reduced remainder of v modulo a Gröbner basis.
template <CoefficientField F>
ModPoly<F> normal_form(const F& field, ModPoly<F> v, const std::vector<ModPoly<F>>& basis,
                       const ModuleOrder& order);

}  // namespace detail

/// Submodule of R^rank: its generators plus the reduced Gröbner basis, computed on construction.
template <CoefficientField F>
class Submodule {
 public:
  using Elem = ModElement<F>;

  Submodule(RingPtr<F> ring, std::size_t rank, std::vector<Elem> generators, ModuleOrder order = {});

  static Submodule zero(RingPtr<F> ring, std::size_t rank, ModuleOrder order = {}) {
    return Submodule(std::move(ring), rank, {}, order);
  }
  static Submodule full(RingPtr<F> ring, std::size_t rank, ModuleOrder order = {}) {
    std::vector<Elem> units;
    for (std::size_t i = 0; i < rank; ++i) units.push_back(Elem::unit(ring, rank, i));
    return Submodule(std::move(ring), rank, std::move(units), order);
  }

  const RingPtr<F>& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const ModuleOrder& order() const { return order_; }
  const std::vector<Elem>& generators() const { return generators_; }
  /// The reduced Gröbner basis as module elements.
  std::vector<Elem> basis() const;
  std::size_t basis_size() const { return gb_.size(); }
  bool is_zero() const { return gb_.empty(); }

  bool contains(const Elem& v) const;
  Elem normal_form(const Elem& v) const;

 private:
  RingPtr<F> ring_;
  std::size_t rank_;
  ModuleOrder order_;
  std::vector<Elem> generators_;
  std::vector<ModPoly<F>> gb_;
};

template <CoefficientField F>
Submodule<F> buchberger(const RingPtr<F>& ring, std::size_t rank, std::vector<ModElement<F>> gens,
                        ModuleOrder order = {}) {
  return Submodule<F>(ring, rank, std::move(gens), order);
}

template <CoefficientField F>
bool is_member(const ModElement<F>& v, const Submodule<F>& U) {
  return U.contains(v);
}

/// Outcome of an inclusion test `small ⊆ big`: the first generator of `small`
/// outside `big` and its normal form modulo `big`.
template <CoefficientField F>
struct InclusionResult {
  bool holds = true;
  std::optional<std::size_t> generator_index;
  std::optional<ModElement<F>> generator;
  std::optional<ModElement<F>> certificate;
};

/// Tests small ⊆ big generator by generator, in the order of small.generators().
template <CoefficientField F>
InclusionResult<F> check_inclusion(const Submodule<F>& small, const Submodule<F>& big);

/// Equality by mutual inclusion. `witness_side` is 0 when U has a generator
/// outside V, 1 when V has one outside U.
template <CoefficientField F>
struct EqualityResult {
  bool equal = true;
  int witness_side = -1;
  InclusionResult<F> failure;
};

template <CoefficientField F>
EqualityResult<F> submodule_equal(const Submodule<F>& U, const Submodule<F>& V);

template <CoefficientField F>
Submodule<F> submodule_sum(const Submodule<F>& U, const Submodule<F>& V);

/// U ∩ V by tag-variable elimination: t·U + (1 - t)·V, eliminate t.
template <CoefficientField F>
Submodule<F> intersect(const Submodule<F>& U, const Submodule<F>& V);

/// U ∩ V computed as image under U's generators of the preimage of V.
template <CoefficientField F>
Submodule<F> intersect_via_syzygies(const Submodule<F>& U, const Submodule<F>& V);

/// R-linear map R^source_rank -> R^target_rank given by its columns.
template <CoefficientField F>
struct ModuleMap {
  std::size_t target_rank = 0;
  std::vector<ModElement<F>> columns;

  std::size_t source_rank() const { return columns.size(); }
  ModElement<F> apply(const ModElement<F>& c) const;
};

/// {c in R^r : phi(c) in W}.
template <CoefficientField F>
Submodule<F> preimage(const ModuleMap<F>& phi, const Submodule<F>& W);

template <CoefficientField F>
Submodule<F> kernel(const ModuleMap<F>& phi);

/// Expresses vectors as R-combinations of fixed generators modulo a fixed submodule.
template <CoefficientField F>
class Lifter {
 public:
  Lifter(RingPtr<F> ring, std::size_t rank, std::vector<ModElement<F>> generators,
         std::vector<ModElement<F>> modulo = {});

  /// Coefficients a with v - Σ a_i g_i in the modulus, or nullopt when none exist.
  std::optional<std::vector<Polynomial<F>>> express(const ModElement<F>& v) const;

 private:
  RingPtr<F> ring_;
  std::size_t rank_, ngens_;
  ModuleOrder order_;
  std::vector<ModPoly<F>> gb_;
};

/// A = R/I. Computations over A happen on full preimages in free R-modules.
template <CoefficientField F>
class QuotientRing {
 public:
  QuotientRing(RingPtr<F> base, std::vector<Polynomial<F>> ideal);

  const RingPtr<F>& base() const { return base_; }
  const std::vector<Polynomial<F>>& ideal_generators() const { return ideal_; }
  bool is_polynomial_ring() const { return ideal_.empty(); }
  bool is_zero_ring() const;
  bool contains(const Polynomial<F>& p) const;
  Polynomial<F> reduce(const Polynomial<F>& p) const;
  /// I·e_k for every generator of I and every basis vector e_k of R^rank.
  std::vector<ModElement<F>> lift_generators(std::size_t rank) const;
  std::string description() const;

 private:
  RingPtr<F> base_;
  std::vector<Polynomial<F>> ideal_;
  std::shared_ptr<const Submodule<F>> ideal_module_;
};

template <CoefficientField F>
using QuotientRingPtr = std::shared_ptr<const QuotientRing<F>>;

template <CoefficientField F>
QuotientRingPtr<F> make_quotient_ring(RingPtr<F> base, std::vector<Polynomial<F>> ideal = {}) {
  return std::make_shared<const QuotientRing<F>>(std::move(base), std::move(ideal));
}

/// Generators over A lifted to R: verbatim plus I·(each basis vector).
template <CoefficientField F>
Submodule<F> lift_to_cover(std::vector<ModElement<F>> gens, std::size_t rank, const QuotientRing<F>& A,
                           ModuleOrder order = {}) {
  auto lifted = A.lift_generators(rank);
  gens.insert(gens.end(), lifted.begin(), lifted.end());
  return Submodule<F>(A.base(), rank, std::move(gens), order);
}

template <CoefficientField F>
struct Presentation {
  std::vector<ModElement<F>> generators;  // g_1..g_r in the ambient of U
  Submodule<F> relations;                 // ⊆ R^r, coker(relations) ≅ U/W
};

/// Presents U/W. With `drop_redundant`, basis elements of U lying in W are omitted.
template <CoefficientField F>
Presentation<F> presentation(const Submodule<F>& U, const Submodule<F>& W, bool drop_redundant = false);

}  // namespace gts
