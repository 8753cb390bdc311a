#include "gts/gammats.hpp"

#include <chrono>

namespace gts {

std::string to_string(Verdict v) { return v == Verdict::Holds ? "HOLDS" : "FAILS"; }

template <CoefficientField F>
void PresentedModule<F>::validate() const {
  if (!ring) throw std::invalid_argument("presented module without a ring");
  if (rank == 0) throw std::invalid_argument("presented module needs a free cover of rank >= 1");
  for (const auto& p : relations) {
    if (p.rank() != rank)
      throw std::invalid_argument("relation of rank " + std::to_string(p.rank()) + " in a module of rank " +
                                  std::to_string(rank));
    if (p.ring() != base() && p.ring()->variables() != base()->variables())
      throw RingMismatch("relation over a different ring");
  }
}

template <CoefficientField F>
std::string PresentedModule<F>::description() const {
  std::string s = "coker " + ring->description() + "^" + std::to_string(rank) + " / [";
  for (std::size_t i = 0; i < relations.size(); ++i) {
    s += i ? "; " : "";
    for (std::size_t k = 0; k < rank; ++k) s += (k ? ", " : "") + relations[i][k].to_string();
  }
  return s + "]";
}

namespace {

template <CoefficientField F>
std::string coefficient_prefix(const Polynomial<F>& c) {
  if (c.is_constant() && c.field().is_one(c.terms().front().second)) return "";
  std::string s = c.to_string();
  return (c.size() > 1 ? "(" + s + ")" : s) + "*";
}

double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

template <CoefficientField F>
std::string describe_tensor(const ModElement<F>& v, std::size_t m, std::size_t n, const std::string& gen) {
  std::string s;
  for (std::size_t lin = 0; lin < v.rank(); ++lin) {
    if (v[lin].is_zero()) continue;
    s += (s.empty() ? "" : " + ") + coefficient_prefix(v[lin]) + tensor_name(tensor_index(lin, m, n), gen);
  }
  return s.empty() ? "0" : s;
}

template <CoefficientField F>
std::string describe_orbit(const OrbitTensor<F>& z) {
  OrbitBasis basis(z.m, z.n);
  std::string s;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (z.coords[k].is_zero()) continue;
    s += (s.empty() ? "" : " + ") + coefficient_prefix(z.coords[k]) + multi_index_name(basis[k]);
  }
  return s.empty() ? "0" : s;
}

template <CoefficientField F>
TensorSetup<F>::TensorSetup(PresentedModule<F> M, std::size_t n, CheckOptions options)
    : M_(std::move(M)), n_(n), rank_(0), options_(options), basis_(std::max<std::size_t>(M_.rank, 1), n) {
  M_.validate();
  rank_ = tensor_rank(M_.rank, n_, options_.guardrail);
  for (std::size_t k = 0; k < basis_.size(); ++k)
    orbit_elements_.push_back(OrbitTensor<F>::basis_element(base(), basis_, k).embed(options_.guardrail));
}

template <CoefficientField F>
std::vector<ModElement<F>> TensorSetup<F>::N_generators() const {
  std::vector<ModElement<F>> out;
  if (n_ == 0) return out;
  std::size_t rest_count = tensor_rank(m(), n_ - 1, options_.guardrail);
  for (const auto& p : M_.relations)
    for (std::size_t slot = 0; slot < n_; ++slot)
      for (std::size_t r = 0; r < rest_count; ++r) {
        auto g = insert_factor(p, slot, tensor_index(r, m(), n_ - 1));
        if (!g.is_zero()) out.push_back(std::move(g));
      }
  return out;
}

template <CoefficientField F>
std::vector<OrbitTensor<F>> TensorSetup<F>::K_generators() const {
  std::vector<OrbitTensor<F>> out;
  for (const auto& p : M_.relations)
    for (std::size_t s = 1; s <= n_; ++s) {
      auto gp = gamma_expand(p, s);
      OrbitBasis rest(m(), n_ - s);
      for (std::size_t k = 0; k < rest.size(); ++k) {
        auto z = shuffle(gp, OrbitTensor<F>::basis_element(base(), rest, k));
        bool zero = true;
        for (const auto& c : z.coords) zero = zero && c.is_zero();
        if (!zero) out.push_back(std::move(z));
      }
    }
  return out;
}

template <CoefficientField F>
Submodule<F> TensorSetup<F>::lifted(std::vector<ModElement<F>> gens) const {
  return lift_to_cover(std::move(gens), rank_, *M_.ring, options_.order);
}

template <CoefficientField F>
const Submodule<F>& TensorSetup<F>::N() const {
  if (!N_) N_ = std::make_shared<const Submodule<F>>(lifted(N_generators()));
  return *N_;
}

template <CoefficientField F>
const Submodule<F>& TensorSetup<F>::K() const {
  if (!K_) {
    std::vector<ModElement<F>> gens;
    for (const auto& z : K_generators()) gens.push_back(z.embed(options_.guardrail));
    K_ = std::make_shared<const Submodule<F>>(lifted(std::move(gens)));
  }
  return *K_;
}

template <CoefficientField F>
const Submodule<F>& TensorSetup<F>::TS() const {
  if (!TS_) TS_ = std::make_shared<const Submodule<F>>(lifted(orbit_elements_));
  return *TS_;
}

template <CoefficientField F>
const Submodule<F>& TensorSetup<F>::invariants() const {
  if (!inv_) inv_ = std::make_shared<const Submodule<F>>(intersect(N(), TS()));
  return *inv_;
}

template <CoefficientField F>
const Submodule<F>& TensorSetup<F>::L() const {
  if (L_) return *L_;
  auto gens = symmetric_generators(n_);
  if (gens.empty()) {
    L_ = std::make_shared<const Submodule<F>>(Submodule<F>::full(base(), rank_, options_.order));
    return *L_;
  }
  std::shared_ptr<const Submodule<F>> acc;
  for (const auto& sigma : gens) {
    ModuleMap<F> phi{rank_, {}};
    for (std::size_t lin = 0; lin < rank_; ++lin) {
      auto e = ModElement<F>::unit(base(), rank_, lin);
      phi.columns.push_back(e - sigma_action(sigma, e, m()));
    }
    auto Lj = preimage(phi, N());
    acc = acc ? std::make_shared<const Submodule<F>>(intersect(*acc, Lj))
              : std::make_shared<const Submodule<F>>(std::move(Lj));
  }
  L_ = acc;
  return *L_;
}

template <CoefficientField F>
const Submodule<F>& TensorSetup<F>::TS_plus_N() const {
  if (!TSN_) {
    auto gens = orbit_elements_;
    auto more = N_generators();
    gens.insert(gens.end(), more.begin(), more.end());
    TSN_ = std::make_shared<const Submodule<F>>(lifted(std::move(gens)));
  }
  return *TSN_;
}

template <CoefficientField F>
bool TensorSetup<F>::is_zero_module() const {
  if (!zero_) {
    auto P = lift_to_cover(M_.relations, m(), *M_.ring, options_.order);
    bool all = true;
    for (std::size_t i = 0; i < m() && all; ++i) all = P.contains(ModElement<F>::unit(base(), m(), i));
    zero_ = all;
  }
  return *zero_;
}

template <CoefficientField F>
std::optional<Witness<F>> find_witness(const std::vector<ModElement<F>>& candidates, const Submodule<F>& smaller,
                                       const Submodule<F>& larger, bool verify) {
  for (const auto& c : candidates) {
    auto nf = smaller.normal_form(c);
    if (nf.is_zero()) continue;
    Witness<F> w{c, nf, {}, std::nullopt, false};
    if (verify) {
      w.verified = larger.contains(c) && !smaller.contains(c);
      if (!w.verified) throw InternalError("witness failed re-verification");
    }
    return w;
  }
  return std::nullopt;
}

namespace {

template <CoefficientField F>
std::optional<CheckResult<F>> trivial_case(const TensorSetup<F>& setup) {
  if (setup.n() <= 1) return CheckResult<F>{Verdict::Holds, std::nullopt, "degree <= 1: the canonical map is the identity", 0};
  if (setup.is_zero_module()) return CheckResult<F>{Verdict::Holds, std::nullopt, "zero module: holds vacuously", 0};
  return std::nullopt;
}

}  // namespace

template <CoefficientField F>
CheckResult<F> check_injective(const TensorSetup<F>& setup) {
  auto start = std::chrono::steady_clock::now();
  if (auto t = trivial_case(setup)) return *t;
  const auto& K = setup.K();
  const auto& inv = setup.invariants();
  if (!check_inclusion(K, inv).holds) throw InternalError("K is not contained in the invariants of N");
  CheckResult<F> r;
  auto w = find_witness(inv.basis(), K, inv, setup.options().verify_witness);
  if (w) {
    r.verdict = Verdict::Fails;
    w->description = describe_tensor(w->element, setup.m(), setup.n());
    w->orbit = orbit_coordinates(w->element, setup.m(), setup.n());
    r.witness = std::move(w);
    r.note = "invariant of N outside K";
  }
  r.seconds = elapsed(start);
  return r;
}

template <CoefficientField F>
CheckResult<F> check_surjective(const TensorSetup<F>& setup) {
  auto start = std::chrono::steady_clock::now();
  if (auto t = trivial_case(setup)) return *t;
  const auto& L = setup.L();
  const auto& TSN = setup.TS_plus_N();
  if (!check_inclusion(TSN, L).holds) throw InternalError("TS(F) + N is not contained in L");
  CheckResult<F> r;
  auto w = find_witness(L.basis(), TSN, L, setup.options().verify_witness);
  if (w) {
    r.verdict = Verdict::Fails;
    w->description = describe_tensor(w->element, setup.m(), setup.n());
    r.witness = std::move(w);
    r.note = "element of L outside TS(F) + N";
  }
  r.seconds = elapsed(start);
  return r;
}

template <CoefficientField F>
CanonicalMapReport<F> check_canonical(const TensorSetup<F>& setup, bool injective, bool surjective) {
  CanonicalMapReport<F> rep;
  rep.n = setup.n();
  rep.zero_module = setup.n() > 1 && setup.is_zero_module();
  if (injective) rep.injective = check_injective(setup);
  if (surjective) rep.surjective = check_surjective(setup);
  return rep;
}

template <CoefficientField F>
PresentedModule<F> gamma_presentation(const TensorSetup<F>& setup) {
  PresentedModule<F> out{setup.module().ring, setup.orbit_basis().size(), {}};
  for (const auto& z : setup.K_generators()) out.relations.push_back(z.as_element());
  return out;
}

template <CoefficientField F>
TsPresentation<F> ts_presentation(const TensorSetup<F>& setup) {
  auto pres = presentation(setup.L(), setup.N(), true);
  TsPresentation<F> out{std::move(pres.generators), {setup.module().ring, 0, {}}};
  out.module.rank = out.generators.size();
  if (out.module.rank) out.module.relations = pres.relations.basis();
  return out;
}

template <CoefficientField F>
CanonicalMapMatrix<F> canonical_map_matrix(const TensorSetup<F>& setup) {
  CanonicalMapMatrix<F> c{gamma_presentation(setup), ts_presentation(setup), {}};
  std::size_t r = c.target.generators.size();
  c.matrix.target_rank = r;
  const auto& R = setup.base();
  Lifter<F> lifter(R, setup.rank(), c.target.generators, setup.N().basis());
  for (const auto& e : setup.orbit_elements()) {
    auto coeffs = lifter.express(e);
    if (!coeffs) throw InternalError("orbit sum not expressible in the generators of L modulo N");
    c.matrix.columns.push_back(ModElement<F>(R, std::move(*coeffs)));
  }
  Submodule<F> rel(R, r, c.target.module.relations);
  for (const auto& k : c.source.relations)
    if (!rel.contains(c.matrix.apply(k))) throw InternalError("canonical map does not respect the relations of K");
  return c;
}

template <CoefficientField F>
PresentedMapVerdicts presented_map_verdicts(const CanonicalMapMatrix<F>& c) {
  const auto& A = *c.source.ring;
  const auto& R = A.base();
  std::size_t r = c.matrix.target_rank, src = c.source.rank;
  auto K = lift_to_cover(c.source.relations, src, A);
  auto rel = lift_to_cover(c.target.module.relations, r, A);
  PresentedMapVerdicts v;
  v.injective = check_inclusion(preimage(c.matrix, rel), K).holds;
  auto gens = c.matrix.columns;
  const auto& more = rel.generators();
  gens.insert(gens.end(), more.begin(), more.end());
  Submodule<F> image(R, r, std::move(gens));
  v.surjective = true;
  for (std::size_t i = 0; i < r && v.surjective; ++i) v.surjective = image.contains(ModElement<F>::unit(R, r, i));
  return v;
}

#define GTS_INSTANTIATE_GAMMATS(F)                                                                         \
  template struct PresentedModule<F>;                                                                     \
  template class TensorSetup<F>;                                                                          \
  template std::string describe_tensor(const ModElement<F>&, std::size_t, std::size_t, const std::string&); \
  template std::string describe_orbit(const OrbitTensor<F>&);                                             \
  template std::optional<Witness<F>> find_witness(const std::vector<ModElement<F>>&, const Submodule<F>&, \
                                                  const Submodule<F>&, bool);                             \
  template CheckResult<F> check_injective(const TensorSetup<F>&);                                         \
  template CheckResult<F> check_surjective(const TensorSetup<F>&);                                        \
  template CanonicalMapReport<F> check_canonical(const TensorSetup<F>&, bool, bool);                      \
  template PresentedModule<F> gamma_presentation(const TensorSetup<F>&);                                  \
  template TsPresentation<F> ts_presentation(const TensorSetup<F>&);                                      \
  template CanonicalMapMatrix<F> canonical_map_matrix(const TensorSetup<F>&);                             \
  template PresentedMapVerdicts presented_map_verdicts(const CanonicalMapMatrix<F>&);

GTS_INSTANTIATE_GAMMATS(PrimeField)
GTS_INSTANTIATE_GAMMATS(RationalField)

}  // namespace gts
