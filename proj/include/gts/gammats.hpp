#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gts/modgb.hpp"
#include "gts/tensoralg.hpp"

namespace gts {

/// Raised when an algebraic invariant that must hold by construction is violated.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// M = A^m / <relations> over A = R/I; relations are lifts to R^m.
template <CoefficientField F>
struct PresentedModule {
  QuotientRingPtr<F> ring;
  std::size_t rank = 0;
  std::vector<ModElement<F>> relations;

  const RingPtr<F>& base() const { return ring->base(); }
  void validate() const;
  std::string description() const;
};

struct CheckOptions {
  std::size_t guardrail = kDefaultGuardrail;
  bool verify_witness = true;
  ModuleOrder order{};
};

enum class Verdict { Holds, Fails };
std::string to_string(Verdict v);

/// Element of the larger submodule outside the smaller one.
template <CoefficientField F>
struct Witness {
  ModElement<F> element;      // coordinates in the ambient free module
  ModElement<F> certificate;  // normal form modulo the smaller submodule
  std::string description;    // class in generator notation, e.g. "s*m1⊗m1⊗m2"
  std::optional<OrbitTensor<F>> orbit;  // orbit coordinates when the element is symmetric
  bool verified = false;
};

template <CoefficientField F>
struct CheckResult {
  Verdict verdict = Verdict::Holds;
  std::optional<Witness<F>> witness;
  std::string note;
  double seconds = 0;
};

template <CoefficientField F>
struct CanonicalMapReport {
  std::size_t n = 0;
  bool zero_module = false;
  std::optional<CheckResult<F>> injective;
  std::optional<CheckResult<F>> surjective;
};

/// `coef*m1⊗m2 + ...` for an element of T^n(F) given in the row-major tensor basis.
template <CoefficientField F>
std::string describe_tensor(const ModElement<F>& v, std::size_t m, std::size_t n, const std::string& gen = "m");

/// `coef*e(2,0) + ...`
template <CoefficientField F>
std::string describe_orbit(const OrbitTensor<F>& z);

/// All submodules of T^n(F) attached to (M, n), computed on first use.
template <CoefficientField F>
class TensorSetup {
 public:
  TensorSetup(PresentedModule<F> M, std::size_t n, CheckOptions options = {});

  const PresentedModule<F>& module() const { return M_; }
  const RingPtr<F>& base() const { return M_.base(); }
  std::size_t n() const { return n_; }
  std::size_t m() const { return M_.rank; }
  std::size_t rank() const { return rank_; }
  const OrbitBasis& orbit_basis() const { return basis_; }
  const CheckOptions& options() const { return options_; }

  /// Orbit sums e_ν embedded in T^n(F).
  const std::vector<ModElement<F>>& orbit_elements() const { return orbit_elements_; }
  /// Slot insertions of the relations (without the I-lift).
  std::vector<ModElement<F>> N_generators() const;
  /// γ^s(p_t) × e_μ in orbit coordinates (without the I-lift).
  std::vector<OrbitTensor<F>> K_generators() const;

  Submodule<F> lifted(std::vector<ModElement<F>> gens) const;

  const Submodule<F>& N() const;
  const Submodule<F>& K() const;
  const Submodule<F>& TS() const;
  const Submodule<F>& invariants() const;
  const Submodule<F>& L() const;
  const Submodule<F>& TS_plus_N() const;
  bool is_zero_module() const;

 private:
  PresentedModule<F> M_;
  std::size_t n_, rank_;
  CheckOptions options_;
  OrbitBasis basis_;
  std::vector<ModElement<F>> orbit_elements_;
  mutable std::shared_ptr<const Submodule<F>> N_, K_, TS_, inv_, L_, TSN_;
  mutable std::optional<bool> zero_;
};

template <CoefficientField F>
Submodule<F> compute_N(const PresentedModule<F>& M, std::size_t n, const CheckOptions& o = {}) {
  return TensorSetup<F>(M, n, o).N();
}
template <CoefficientField F>
Submodule<F> compute_K(const PresentedModule<F>& M, std::size_t n, const CheckOptions& o = {}) {
  return TensorSetup<F>(M, n, o).K();
}
template <CoefficientField F>
Submodule<F> compute_invariants(const PresentedModule<F>& M, std::size_t n, const CheckOptions& o = {}) {
  return TensorSetup<F>(M, n, o).invariants();
}
template <CoefficientField F>
Submodule<F> compute_L(const PresentedModule<F>& M, std::size_t n, const CheckOptions& o = {}) {
  return TensorSetup<F>(M, n, o).L();
}

/// First element of `candidates` outside `smaller`, verified when requested.
template <CoefficientField F>
std::optional<Witness<F>> find_witness(const std::vector<ModElement<F>>& candidates, const Submodule<F>& smaller,
                                       const Submodule<F>& larger, bool verify);

/// K = N^{S_n}.
template <CoefficientField F>
CheckResult<F> check_injective(const TensorSetup<F>& setup);
/// TS^n(F) + N = L.
template <CoefficientField F>
CheckResult<F> check_surjective(const TensorSetup<F>& setup);
template <CoefficientField F>
CanonicalMapReport<F> check_canonical(const TensorSetup<F>& setup, bool injective = true, bool surjective = true);

template <CoefficientField F>
CheckResult<F> check_injective(const PresentedModule<F>& M, std::size_t n, const CheckOptions& o = {}) {
  return check_injective(TensorSetup<F>(M, n, o));
}
template <CoefficientField F>
CheckResult<F> check_surjective(const PresentedModule<F>& M, std::size_t n, const CheckOptions& o = {}) {
  return check_surjective(TensorSetup<F>(M, n, o));
}

/// Γ^n(M) ≅ TS^n(F)/K: orbit basis generators, K in orbit coordinates as relations.
template <CoefficientField F>
PresentedModule<F> gamma_presentation(const TensorSetup<F>& setup);

/// TS^n(M) ≅ L/N with the generators of L taken from its reduced basis, omitting those in N.
template <CoefficientField F>
struct TsPresentation {
  std::vector<ModElement<F>> generators;  // in T^n(F)
  PresentedModule<F> module;
};

template <CoefficientField F>
TsPresentation<F> ts_presentation(const TensorSetup<F>& setup);

/// Matrix of Γ^n(M) -> TS^n(M) between the two presentations: column ν expresses e_ν
/// in the generators of the TS presentation modulo N.
template <CoefficientField F>
struct CanonicalMapMatrix {
  PresentedModule<F> source;
  TsPresentation<F> target;
  ModuleMap<F> matrix;
};

template <CoefficientField F>
CanonicalMapMatrix<F> canonical_map_matrix(const TensorSetup<F>& setup);

/// Injectivity and surjectivity of the presented map coker(K) -> coker(Rel).
struct PresentedMapVerdicts {
  bool injective = false;
  bool surjective = false;
};

template <CoefficientField F>
PresentedMapVerdicts presented_map_verdicts(const CanonicalMapMatrix<F>& c);

}  // namespace gts
