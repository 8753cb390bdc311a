#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gts/gammats.hpp"

namespace gts {

/// S^k(M) presented on the degree-k monomials in m_1..m_m (ordered as multi_indices(m, k)).
template <CoefficientField F>
struct SymPowerPresentation {
  std::size_t k = 0;
  std::vector<MultiIndex> monomials;
  PresentedModule<F> module;
};

/// Relations p_t · μ for every relation p_t and every monomial μ of degree k-1.
template <CoefficientField F>
SymPowerPresentation<F> sym_power(const PresentedModule<F>& M, std::size_t k);

template <CoefficientField F>
struct AlgebraDegreeReport {
  std::size_t k = 0;
  CanonicalMapReport<F> report;
};

/// Canonical-map checks on the graded pieces S^k(M) of B = S_A(M). A failure in any degree is
/// a failure for B itself.
template <CoefficientField F>
struct AlgebraCheck {
  std::size_t n = 0;
  std::vector<AlgebraDegreeReport<F>> degrees;
  bool algebra_not_injective = false;
  bool algebra_not_surjective = false;
};

template <CoefficientField F>
AlgebraCheck<F> algebra_degreewise_check(const PresentedModule<F>& M, std::size_t n,
                                         const std::vector<std::size_t>& degrees, const CheckOptions& o = {});

/// D ⊆ T^2(F) generated by e_i⊗e_i and e_i⊗e_j + e_j⊗e_i.
template <CoefficientField F>
std::vector<ModElement<F>> diagonal_generators(const RingPtr<F>& R, std::size_t m);

/// x⊗y + y⊗x = (x+y)⊗(x+y) - x⊗x - y⊗y in T^2(F).
template <CoefficientField F>
bool polarization_identity(const ModElement<F>& x, const ModElement<F>& y);

struct WedgeKernelReport {
  bool diagonal_is_orbit_span = false;  // D = Span(e_ν)
  bool contained_in_L = false;          // D + N ⊆ L
  bool kernel_equals_image = false;     // L ∩ (D + N) = D + N
  bool kernel_is_proper = false;        // D + N ≠ L, i.e. ∧^2 receives a nonzero symmetric class
  bool holds() const { return diagonal_is_orbit_span && contained_in_L && kernel_equals_image; }
};

/// ker(TS^2(M) -> ∧^2(M)) = im(Γ^2(M) -> TS^2(M)), checked on lifts to T^2(F).
template <CoefficientField F>
WedgeKernelReport wedge_kernel_check(const PresentedModule<F>& M, const CheckOptions& o = {});

/// η ∈ L with η ∉ D + N: a symmetric tensor with φ(η) ≠ 0 in ∧^2, which rules out a TS^2-module
/// structure on ∧^2 making φ linear.
template <CoefficientField F>
struct ObstructionResult {
  std::optional<Witness<F>> eta;
  std::string message;
  bool found() const { return eta.has_value(); }
};

template <CoefficientField F>
ObstructionResult<F> ts_module_structure_obstruction(const PresentedModule<F>& M, const CheckOptions& o = {});

}  // namespace gts
