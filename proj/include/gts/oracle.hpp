#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gts/gammats.hpp"
#include "gts/linalg.hpp"

namespace gts {

class InhomogeneousInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct OracleOptions {
  std::optional<Grading> grading;  // total degree when absent
  unsigned d_max = 6;
  std::size_t max_elements = 2'000'000;  // monomial-times-basis-tensor count over all degrees
};

/// Dimensions over the field in one degree. K, Γ(F) and the invariants are measured on the polynomial
/// cover with the I-lift included, which leaves the defects unchanged.
struct DegreeRow {
  std::vector<long> degree;
  std::size_t tensor_dim = 0;     // T^n(M)_d
  std::size_t fixed_dim = 0;      // TS^n(M)_d
  std::size_t image_dim = 0;      // image of Span(e_ν)_d in T^n(M)_d
  std::size_t gamma_dim = 0;      // Γ^n(M)_d
  std::size_t invariant_dim = 0;  // (N ∩ TS(F))_d
  std::size_t k_dim = 0;          // K_d

  long surjective_defect() const { return static_cast<long>(fixed_dim) - static_cast<long>(image_dim); }
  long injective_defect() const { return static_cast<long>(invariant_dim) - static_cast<long>(k_dim); }
};

struct GradedVerdict {
  Grading grading;
  std::vector<std::vector<long>> shifts;  // degree of each generator m_i
  unsigned d_max = 0;
  std::size_t finest_rank = 0;            // rank of the finest compatible grading used for splitting
  std::vector<DegreeRow> rows;            // ascending, only degrees with nonzero T^n(F) part
  std::optional<std::vector<long>> first_injective_defect;
  std::optional<std::vector<long>> first_surjective_defect;

  bool injective_clean() const { return !first_injective_defect; }
  bool surjective_clean() const { return !first_surjective_defect; }
};

/// Degrees of the generators making every relation homogeneous, normalized so that each coordinate
/// has minimum 0 within every connected block of generators. Throws InhomogeneousInput.
template <CoefficientField F>
std::vector<std::vector<long>> infer_shifts(const PresentedModule<F>& M, const Grading& g);

/// A_d = R_d / I_d with the standard monomials (those that are not leading terms of I_d under
/// degrevlex) as basis.
template <CoefficientField F>
struct GradedComponent {
  std::vector<long> degree;
  std::vector<Monomial> monomials;
  std::vector<Monomial> standard;
};

template <CoefficientField F>
GradedComponent<F> graded_component(const QuotientRing<F>& A, const Grading& g, const std::vector<long>& degree);

/// Degree of a homogeneous element of T^n(F), nullopt when inhomogeneous or zero.
template <CoefficientField F>
std::optional<std::vector<long>> tensor_degree(const ModElement<F>& v, std::size_t m, std::size_t n, const Grading& g,
                                               const std::vector<std::vector<long>>& shifts);

/// Degree-by-degree dimension comparison up to d_max in the first grading coordinate, by linear algebra
/// over the field only.
template <CoefficientField F>
GradedVerdict graded_verdict(const PresentedModule<F>& M, std::size_t n, const OracleOptions& options = {});

std::string degree_to_string(const std::vector<long>& d);

}  // namespace gts
