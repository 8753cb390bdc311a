#include "gts/extalg.hpp"

namespace gts {

template <CoefficientField F>
SymPowerPresentation<F> sym_power(const PresentedModule<F>& M, std::size_t k) {
  M.validate();
  const auto& R = M.base();
  SymPowerPresentation<F> out{k, multi_indices(M.rank, k), {M.ring, 0, {}}};
  out.module.rank = out.monomials.size();
  if (k == 0) return out;
  OrbitBasis target(M.rank, k), lower(M.rank, k - 1);
  for (const auto& p : M.relations)
    for (const auto& mu : lower.indices()) {
      ModElement<F> v(R, target.size());
      for (std::size_t i = 0; i < M.rank; ++i) {
        if (p[i].is_zero()) continue;
        MultiIndex nu = mu;
        ++nu[i];
        v[target.position(nu)] += p[i];
      }
      if (!v.is_zero()) out.module.relations.push_back(std::move(v));
    }
  return out;
}

template <CoefficientField F>
AlgebraCheck<F> algebra_degreewise_check(const PresentedModule<F>& M, std::size_t n,
                                         const std::vector<std::size_t>& degrees, const CheckOptions& o) {
  AlgebraCheck<F> out;
  out.n = n;
  for (std::size_t k : degrees) {
    auto rep = check_canonical(TensorSetup<F>(sym_power(M, k).module, n, o));
    out.algebra_not_injective = out.algebra_not_injective || rep.injective->verdict == Verdict::Fails;
    out.algebra_not_surjective = out.algebra_not_surjective || rep.surjective->verdict == Verdict::Fails;
    out.degrees.push_back({k, std::move(rep)});
  }
  return out;
}

template <CoefficientField F>
std::vector<ModElement<F>> diagonal_generators(const RingPtr<F>& R, std::size_t m) {
  std::vector<ModElement<F>> out;
  auto one = Polynomial<F>::constant(R, R->field().one());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      ModElement<F> v(R, m * m);
      v[i * m + j] += one;
      if (j != i) v[j * m + i] += one;
      out.push_back(std::move(v));
    }
  return out;
}

template <CoefficientField F>
bool polarization_identity(const ModElement<F>& x, const ModElement<F>& y) {
  auto lhs = tensor_product(x, y) + tensor_product(y, x);
  auto s = x + y;
  auto rhs = tensor_product(s, s) - tensor_product(x, x) - tensor_product(y, y);
  return lhs == rhs;
}

template <CoefficientField F>
WedgeKernelReport wedge_kernel_check(const PresentedModule<F>& M, const CheckOptions& o) {
  TensorSetup<F> S(M, 2, o);
  auto gens = diagonal_generators(S.base(), S.m());
  Submodule<F> D(S.base(), S.rank(), gens, o.order);
  WedgeKernelReport r;
  r.diagonal_is_orbit_span =
      submodule_equal(D, Submodule<F>(S.base(), S.rank(), S.orbit_elements(), o.order)).equal;
  auto more = S.N_generators();
  gens.insert(gens.end(), more.begin(), more.end());
  auto DN = S.lifted(std::move(gens));
  r.contained_in_L = check_inclusion(DN, S.L()).holds;
  r.kernel_equals_image = submodule_equal(intersect(S.L(), DN), DN).equal;
  r.kernel_is_proper = !check_inclusion(S.L(), DN).holds;
  return r;
}

template <CoefficientField F>
ObstructionResult<F> ts_module_structure_obstruction(const PresentedModule<F>& M, const CheckOptions& o) {
  TensorSetup<F> S(M, 2, o);
  ObstructionResult<F> out;
  auto check = check_surjective(S);
  if (check.verdict == Verdict::Holds) {
    out.message = "no obstruction found: Γ^2(M) -> TS^2(M) is surjective, so φ kills TS^2(M)";
    return out;
  }
  // re-verify against D + N built from the diagonal generators rather than the orbit sums
  auto gens = diagonal_generators(S.base(), S.m());
  auto more = S.N_generators();
  gens.insert(gens.end(), more.begin(), more.end());
  auto DN = S.lifted(std::move(gens));
  auto eta = *check.witness;
  eta.certificate = DN.normal_form(eta.element);
  eta.verified = S.L().contains(eta.element) && !eta.certificate.is_zero();
  if (!eta.verified) throw InternalError("obstruction witness failed re-verification");
  out.message = "η = " + eta.description + " is symmetric with φ(η) ≠ 0 in ∧^2(M)";
  out.eta = std::move(eta);
  return out;
}

#define GTS_INSTANTIATE_EXTALG(F)                                                                        \
  template SymPowerPresentation<F> sym_power(const PresentedModule<F>&, std::size_t);                   \
  template AlgebraCheck<F> algebra_degreewise_check(const PresentedModule<F>&, std::size_t,             \
                                                    const std::vector<std::size_t>&, const CheckOptions&); \
  template std::vector<ModElement<F>> diagonal_generators(const RingPtr<F>&, std::size_t);              \
  template bool polarization_identity(const ModElement<F>&, const ModElement<F>&);                      \
  template WedgeKernelReport wedge_kernel_check(const PresentedModule<F>&, const CheckOptions&);        \
  template ObstructionResult<F> ts_module_structure_obstruction(const PresentedModule<F>&, const CheckOptions&);

GTS_INSTANTIATE_EXTALG(PrimeField)
GTS_INSTANTIATE_EXTALG(RationalField)

}  // namespace gts
