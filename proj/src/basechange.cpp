#include "gts/basechange.hpp"

#include <chrono>

namespace gts {

std::string to_string(Corroboration c) { return c == Corroboration::Agrees ? "agrees" : "inconclusive"; }

namespace {

double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <CoefficientField F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  return a == b || a->variables() == b->variables();
}

}  // namespace

template <CoefficientField F>
void BaseExtension<F>::validate() const {
  if (!source || !target) throw std::invalid_argument("base extension without rings");
  const auto& R = source->base();
  if (images.size() != R->nvars())
    throw std::invalid_argument("ring map gives " + std::to_string(images.size()) + " images for " +
                                std::to_string(R->nvars()) + " variables");
  if (R->field().characteristic() != target->base()->field().characteristic())
    throw std::invalid_argument("ring map between fields of different characteristic");
  for (const auto& img : images)
    if (!same_ring(img.ring(), target->base())) throw std::invalid_argument("variable image outside the target ring");
  for (const auto& g : source->ideal_generators())
    if (!target->contains(map(g)))
      throw std::invalid_argument("ring map does not send the ideal generator " + g.to_string() +
                                  " into the target ideal");
}

template <CoefficientField F>
Polynomial<F> BaseExtension<F>::map(const Polynomial<F>& p) const {
  return substitute(p, target->base(), images);
}

template <CoefficientField F>
ModElement<F> BaseExtension<F>::map(const ModElement<F>& v) const {
  ModElement<F> out(target->base(), v.rank());
  for (std::size_t i = 0; i < v.rank(); ++i) out[i] = map(v[i]);
  return out;
}

template <CoefficientField F>
std::string BaseExtension<F>::description() const {
  std::string s = source->description() + " -> " + target->description();
  const auto& vars = source->base()->variables();
  bool plain = true;
  for (std::size_t i = 0; i < vars.size(); ++i) plain = plain && images[i].to_string() == vars[i];
  if (plain) return s;
  s += " (";
  for (std::size_t i = 0; i < vars.size(); ++i) s += (i ? ", " : "") + vars[i] + " -> " + images[i].to_string();
  return s + ")";
}

template <CoefficientField F>
BaseExtension<F> BaseExtension<F>::identity(QuotientRingPtr<F> A) {
  return by_names(A, A);
}

template <CoefficientField F>
BaseExtension<F> BaseExtension<F>::by_names(QuotientRingPtr<F> A, QuotientRingPtr<F> target) {
  BaseExtension e{A, target, {}};
  const auto& R2 = target->base();
  for (const auto& v : A->base()->variables()) {
    auto k = R2->index_of(v);
    if (!k) throw std::invalid_argument("variable " + v + " has no counterpart in " + target->description());
    e.images.push_back(Polynomial<F>::variable(R2, *k));
  }
  e.validate();
  return e;
}

template <CoefficientField F>
PresentedModule<F> extend_module(const PresentedModule<F>& M, const BaseExtension<F>& e) {
  e.validate();
  if (!same_ring(M.base(), e.source->base())) throw RingMismatch("module is not defined over the source ring");
  PresentedModule<F> out{e.target, M.rank, {}};
  for (const auto& p : M.relations) out.relations.push_back(e.map(p));
  return out;
}

namespace {

template <CoefficientField F>
std::optional<CheckResult<F>> trivial_base_change(const TensorSetup<F>& target) {
  if (target.n() <= 1)
    return CheckResult<F>{Verdict::Holds, std::nullopt, "degree <= 1: base change of M is an isomorphism", 0};
  if (target.is_zero_module())
    return CheckResult<F>{Verdict::Holds, std::nullopt, "zero module after base change: holds vacuously", 0};
  return std::nullopt;
}

}  // namespace

template <CoefficientField F>
CheckResult<F> base_change_surjective(const PresentedModule<F>& M, std::size_t n, const BaseExtension<F>& e,
                                      const CheckOptions& o) {
  auto start = std::chrono::steady_clock::now();
  TensorSetup<F> S2(extend_module(M, e), n, o);
  if (auto t = trivial_base_change(S2)) return *t;
  TensorSetup<F> S(M, n, o);
  std::vector<ModElement<F>> gens;
  for (const auto& g : S.L().basis()) gens.push_back(e.map(g));
  auto more = S2.N_generators();
  gens.insert(gens.end(), more.begin(), more.end());
  auto image = S2.lifted(std::move(gens));
  const auto& L2 = S2.L();
  if (!check_inclusion(image, L2).holds) throw InternalError("image of L is not contained in L'");
  CheckResult<F> r;
  auto w = find_witness(L2.basis(), image, L2, o.verify_witness);
  if (w) {
    r.verdict = Verdict::Fails;
    w->description = describe_tensor(w->element, S2.m(), n);
    r.witness = std::move(w);
    r.note = "element of L' outside the image of L plus N'";
  }
  r.seconds = elapsed(start);
  return r;
}

template <CoefficientField F>
CheckResult<F> base_change_injective(const PresentedModule<F>& M, std::size_t n, const BaseExtension<F>& e,
                                     const CheckOptions& o) {
  auto start = std::chrono::steady_clock::now();
  TensorSetup<F> S2(extend_module(M, e), n, o);
  if (auto t = trivial_base_change(S2)) return *t;
  TensorSetup<F> S(M, n, o);
  auto pres = ts_presentation(S);
  std::size_t r = pres.generators.size();
  if (r == 0) return CheckResult<F>{Verdict::Holds, std::nullopt, "TS^n(M) is zero", elapsed(start)};
  ModuleMap<F> phi{S2.rank(), {}};
  for (const auto& g : pres.generators) phi.columns.push_back(e.map(g));
  auto ker = preimage(phi, S2.N());
  std::vector<ModElement<F>> rel;
  for (const auto& q : pres.module.relations) rel.push_back(e.map(q));
  auto Rel = lift_to_cover(std::move(rel), r, *e.target, o.order);
  if (!check_inclusion(Rel, ker).holds) throw InternalError("relations of TS^n(M) do not map into N'");
  CheckResult<F> res;
  auto w = find_witness(ker.basis(), Rel, ker, o.verify_witness);
  if (w) {
    res.verdict = Verdict::Fails;
    std::string d;
    for (std::size_t i = 0; i < r; ++i) {
      if (w->element[i].is_zero()) continue;
      d += (d.empty() ? "" : " + ") + std::string("[") + describe_tensor(pres.generators[i], S.m(), n) + "]⊗(" +
           w->element[i].to_string() + ")";
    }
    w->description = d;
    res.witness = std::move(w);
    res.note = "nonzero class of TS^n(M) ⊗ A' mapping into N'";
  }
  res.seconds = elapsed(start);
  return res;
}

template <CoefficientField F>
DiagramCheck<F> diagram_cross_check(const PresentedModule<F>& M, std::size_t n, const BaseExtension<F>& e,
                                    Verdict direct_injective, Verdict direct_surjective, const CheckOptions& o) {
  DiagramCheck<F> d;
  d.source_side = check_canonical(TensorSetup<F>(M, n, o));
  d.target_side = check_canonical(TensorSetup<F>(extend_module(M, e), n, o));
  bool src_inj = d.source_side.injective->verdict == Verdict::Holds;
  bool src_sur = d.source_side.surjective->verdict == Verdict::Holds;
  bool tgt_inj = d.target_side.injective->verdict == Verdict::Holds;
  bool tgt_sur = d.target_side.surjective->verdict == Verdict::Holds;
  if (src_inj && src_sur) {
    // left vertical and top maps are isomorphisms, so the bottom map behaves like the right one
    d.implied_injective = tgt_inj;
    d.implied_surjective = tgt_sur;
    d.injective_reason = "canonical map over A is an isomorphism; over A' it is " +
                         std::string(tgt_inj ? "injective" : "not injective");
    d.surjective_reason = "canonical map over A is an isomorphism; over A' it is " +
                          std::string(tgt_sur ? "surjective" : "not surjective");
  } else {
    d.injective_reason = "canonical map over A is not an isomorphism";
    if (src_sur && !tgt_sur) {
      d.implied_surjective = false;
      d.surjective_reason = "canonical map is surjective over A but not over A'";
    } else {
      d.surjective_reason = src_sur ? "canonical map is surjective on both sides" : "canonical map over A is not surjective";
    }
  }
  auto compare = [](const std::optional<bool>& implied, Verdict direct, const char* what) {
    if (!implied) return Corroboration::Inconclusive;
    if (*implied != (direct == Verdict::Holds))
      throw InternalError(std::string("diagram chase contradicts the direct ") + what + " verdict");
    return Corroboration::Agrees;
  };
  d.injective = compare(d.implied_injective, direct_injective, "injectivity");
  d.surjective = compare(d.implied_surjective, direct_surjective, "surjectivity");
  return d;
}

template <CoefficientField F>
BaseChangeReport<F> check_base_change(const PresentedModule<F>& M, std::size_t n, const BaseExtension<F>& e,
                                      const CheckOptions& o) {
  BaseChangeReport<F> rep;
  rep.n = n;
  rep.injective = base_change_injective(M, n, e, o);
  rep.surjective = base_change_surjective(M, n, e, o);
  rep.diagram = diagram_cross_check(M, n, e, rep.injective.verdict, rep.surjective.verdict, o);
  return rep;
}

template <CoefficientField F>
bool gamma_functoriality(const PresentedModule<F>& M, std::size_t n, const BaseExtension<F>& e,
                         const CheckOptions& o) {
  TensorSetup<F> S(M, n, o);
  TensorSetup<F> S2(extend_module(M, e), n, o);
  std::vector<ModElement<F>> gens;
  for (const auto& z : S.K_generators()) gens.push_back(e.map(z.embed(o.guardrail)));
  return submodule_equal(S2.lifted(std::move(gens)), S2.K()).equal;
}

#define GTS_INSTANTIATE_BASECHANGE(F)                                                                           \
  template struct BaseExtension<F>;                                                                             \
  template PresentedModule<F> extend_module(const PresentedModule<F>&, const BaseExtension<F>&);                \
  template CheckResult<F> base_change_surjective(const PresentedModule<F>&, std::size_t, const BaseExtension<F>&, \
                                                 const CheckOptions&);                                          \
  template CheckResult<F> base_change_injective(const PresentedModule<F>&, std::size_t, const BaseExtension<F>&,  \
                                                const CheckOptions&);                                           \
  template DiagramCheck<F> diagram_cross_check(const PresentedModule<F>&, std::size_t, const BaseExtension<F>&,  \
                                               Verdict, Verdict, const CheckOptions&);                          \
  template BaseChangeReport<F> check_base_change(const PresentedModule<F>&, std::size_t, const BaseExtension<F>&, \
                                                 const CheckOptions&);                                          \
  template bool gamma_functoriality(const PresentedModule<F>&, std::size_t, const BaseExtension<F>&,             \
                                    const CheckOptions&);

GTS_INSTANTIATE_BASECHANGE(PrimeField)
GTS_INSTANTIATE_BASECHANGE(RationalField)

}  // namespace gts
