#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gts/gammats.hpp"

namespace gts {

/// Ring map A = R/I -> A' = R'/I' given by the images of the variables of R.
template <CoefficientField F>
struct BaseExtension {
  QuotientRingPtr<F> source;
  QuotientRingPtr<F> target;
  std::vector<Polynomial<F>> images;  // one per variable of R, in R'

  /// Throws std::invalid_argument unless the images live in R' and I maps into I'.
  void validate() const;
  Polynomial<F> map(const Polynomial<F>& p) const;
  ModElement<F> map(const ModElement<F>& v) const;
  std::string description() const;

  static BaseExtension identity(QuotientRingPtr<F> A);
  /// Each variable of R goes to the variable of R' with the same name.
  static BaseExtension by_names(QuotientRingPtr<F> A, QuotientRingPtr<F> target);
};

/// R[names], keeping the variables of R first.
template <CoefficientField F>
RingPtr<F> adjoin_variables(const RingPtr<F>& R, const std::vector<std::string>& names) {
  auto vars = R->variables();
  for (const auto& v : names) {
    if (R->index_of(v)) throw std::invalid_argument("variable " + v + " already present");
    vars.push_back(v);
  }
  return make_ring(R->field(), std::move(vars));
}

/// A -> R'/(I R' + extra) where R' contains the variables of R by name.
template <CoefficientField F>
BaseExtension<F> quotient_extension(QuotientRingPtr<F> A, RingPtr<F> R2, std::vector<Polynomial<F>> extra = {}) {
  BaseExtension<F> e{A, make_quotient_ring(R2), {}};
  for (const auto& v : A->base()->variables()) {
    auto k = R2->index_of(v);
    if (!k) throw std::invalid_argument("variable " + v + " missing from the extended ring");
    e.images.push_back(Polynomial<F>::variable(R2, *k));
  }
  std::vector<Polynomial<F>> ideal;
  for (const auto& g : A->ideal_generators()) ideal.push_back(e.map(g));
  ideal.insert(ideal.end(), extra.begin(), extra.end());
  e.target = make_quotient_ring(R2, std::move(ideal));
  e.validate();
  return e;
}

/// M ⊗_A A': same rank, relations mapped coefficientwise.
template <CoefficientField F>
PresentedModule<F> extend_module(const PresentedModule<F>& M, const BaseExtension<F>& e);

/// TS^n_A(M) ⊗ A' -> TS^n_{A'}(M') is onto iff the images of the generators of L, together with N', span L'.
/// The witness lies in T^n(F') and is the first basis element of L' outside the image.
template <CoefficientField F>
CheckResult<F> base_change_surjective(const PresentedModule<F>& M, std::size_t n, const BaseExtension<F>& e,
                                      const CheckOptions& o = {});

/// Injectivity on the presentation TS^n_A(M) ≅ A^r/Rel tensored with A'. The witness element is a
/// coefficient vector c in A'^r outside Rel' with Σ c_i g_i in N'; its description is Σ [g_i]⊗c_i.
template <CoefficientField F>
CheckResult<F> base_change_injective(const PresentedModule<F>& M, std::size_t n, const BaseExtension<F>& e,
                                     const CheckOptions& o = {});

enum class Corroboration { Agrees, Inconclusive };
std::string to_string(Corroboration c);

/// Consequences of the square Γ(M)⊗A' ≅ Γ(M') over the two canonical maps.
template <CoefficientField F>
struct DiagramCheck {
  CanonicalMapReport<F> source_side;
  CanonicalMapReport<F> target_side;
  std::optional<bool> implied_injective;
  std::optional<bool> implied_surjective;
  std::string injective_reason, surjective_reason;
  Corroboration injective = Corroboration::Inconclusive;
  Corroboration surjective = Corroboration::Inconclusive;
};

/// Derives what the canonical-map verdicts on both sides imply for the base-change map and compares with
/// the direct verdicts; a contradiction raises InternalError.
template <CoefficientField F>
DiagramCheck<F> diagram_cross_check(const PresentedModule<F>& M, std::size_t n, const BaseExtension<F>& e,
                                    Verdict direct_injective, Verdict direct_surjective, const CheckOptions& o = {});

template <CoefficientField F>
struct BaseChangeReport {
  std::size_t n = 0;
  CheckResult<F> injective;
  CheckResult<F> surjective;
  DiagramCheck<F> diagram;
};

template <CoefficientField F>
BaseChangeReport<F> check_base_change(const PresentedModule<F>& M, std::size_t n, const BaseExtension<F>& e,
                                      const CheckOptions& o = {});

/// The generators of K over A map onto generators of K' over A' (up to the I'-lift).
template <CoefficientField F>
bool gamma_functoriality(const PresentedModule<F>& M, std::size_t n, const BaseExtension<F>& e,
                         const CheckOptions& o = {});

}  // namespace gts
