#include "gts/modgb.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

namespace gts {

std::string ModuleOrder::description() const {
  std::string s = (position_over_term ? "POT " : "TOP ") + to_string(monomial);
  if (elimination_variable >= 0) s += ", eliminating x" + std::to_string(elimination_variable);
  if (position_block) s += ", block " + std::to_string(position_block);
  return s;
}

GbStats& thread_gb_stats() {
  thread_local GbStats stats;
  return stats;
}

namespace detail {

namespace {

template <CoefficientField F>
int cmp(const ModTerm<F>& a, const ModTerm<F>& b, const ModuleOrder& o) {
  return compare_terms(a.mono, a.pos, b.mono, b.pos, o);
}

template <CoefficientField F>
void sort_terms(ModPoly<F>& p, const ModuleOrder& o) {
  std::sort(p.begin(), p.end(), [&](const ModTerm<F>& a, const ModTerm<F>& b) { return cmp(a, b, o) > 0; });
}

/// p[from+1..] - c * m * g[1..]; assumes c * m * lt(g) cancels p[from].
template <CoefficientField F>
ModPoly<F> cancel_head(const F& f, const ModuleOrder& o, const ModPoly<F>& p, std::size_t from,
                       const typename F::Elem& c, const Monomial& m, const ModPoly<F>& g) {
  ModPoly<F> r;
  r.reserve(p.size() - from + g.size());
  std::size_t i = from + 1, j = 1;
  ModTerm<F> gt;
  auto load = [&] {
    if (j < g.size()) gt = ModTerm<F>{m * g[j].mono, g[j].pos, f.neg(f.mul(c, g[j].coef))};
  };
  load();
  while (i < p.size() || j < g.size()) {
    if (j == g.size()) {
      r.push_back(p[i++]);
      continue;
    }
    int s = i < p.size() ? cmp(p[i], gt, o) : -1;
    if (s > 0) {
      r.push_back(p[i++]);
    } else if (s < 0) {
      r.push_back(std::move(gt));
      ++j;
      load();
    } else {
      auto v = f.add(p[i].coef, gt.coef);
      if (!f.is_zero(v)) r.push_back(ModTerm<F>{p[i].mono, p[i].pos, std::move(v)});
      ++i;
      ++j;
      load();
    }
  }
  return r;
}

/// Full reduction; terms before `keep` are left untouched. `find` maps a term to a
/// monic reducer whose leading term divides it, or nullptr.
template <CoefficientField F, class Find>
ModPoly<F> reduce_with(const F& f, const ModuleOrder& o, ModPoly<F> p, std::size_t keep, Find&& find) {
  ModPoly<F> done(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(std::min(keep, p.size())));
  std::size_t head = done.size();
  while (head < p.size()) {
    const ModTerm<F>& t = p[head];
    const ModPoly<F>* g = find(t);
    if (!g) {
      done.push_back(p[head++]);
      continue;
    }
    Monomial m = g->front().mono.quotient_of(t.mono);
    p = cancel_head(f, o, p, head, t.coef, m, *g);
    head = 0;
  }
  return done;
}

template <CoefficientField F>
void make_monic(const F& f, ModPoly<F>& p) {
  if (p.empty() || f.is_one(p.front().coef)) return;
  auto inv = f.inv(p.front().coef);
  for (auto& t : p) t.coef = f.mul(t.coef, inv);
}

template <CoefficientField F>
unsigned poly_sugar(const ModPoly<F>& p) {
  unsigned s = 0;
  for (const auto& t : p) s = std::max(s, t.mono.degree());
  return s;
}

template <CoefficientField F>
class Engine {
 public:
  Engine(const F& f, const ModuleOrder& o, bool ideal_case) : f_(f), o_(o), ideal_case_(ideal_case) {}

  std::vector<ModPoly<F>> run(std::vector<ModPoly<F>> gens) {
    stats_.runs = 1;
    std::sort(gens.begin(), gens.end(), [&](const ModPoly<F>& a, const ModPoly<F>& b) {
      if (a.empty() || b.empty()) return !a.empty() && b.empty();
      return cmp(a.front(), b.front(), o_) < 0;
    });
    for (auto& g : gens) {
      if (g.empty()) continue;
      unsigned sugar = poly_sugar(g);
      auto h = reduce(std::move(g), 0);
      if (!h.empty()) insert(std::move(h), sugar);
    }
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (pair_less(pairs_[k], pairs_[best])) best = k;
      Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      ++stats_.pairs_reduced;
      auto h = reduce(spoly(p), 0);
      if (h.empty())
        ++stats_.zero_reductions;
      else
        insert(std::move(h), p.sugar);
    }
    std::vector<ModPoly<F>> out;
    for (std::size_t k : active_) out.push_back(reduce(basis_[k].poly, 1));
    std::sort(out.begin(), out.end(),
              [&](const ModPoly<F>& a, const ModPoly<F>& b) { return cmp(a.front(), b.front(), o_) < 0; });
    stats_.basis_elements = out.size();
    thread_gb_stats() += stats_;
    return out;
  }

 private:
  struct Entry {
    ModPoly<F> poly;
    std::uint32_t mask;
    unsigned sugar;
  };
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint32_t pos;
    unsigned sugar;
  };

  const ModTerm<F>& lead(std::size_t k) const { return basis_[k].poly.front(); }

  bool pair_less(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (int c = compare_terms(a.lcm, a.pos, b.lcm, b.pos, o_)) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  }

  ModPoly<F> reduce(ModPoly<F> p, std::size_t keep) {
    return reduce_with(f_, o_, std::move(p), keep, [&](const ModTerm<F>& t) -> const ModPoly<F>* {
      std::uint32_t tm = t.mono.support_mask();
      for (std::size_t k : active_) {
        const Entry& e = basis_[k];
        const ModTerm<F>& lt = e.poly.front();
        if (lt.pos == t.pos && (e.mask & ~tm) == 0 && lt.mono.divides(t.mono)) return &e.poly;
      }
      return nullptr;
    });
  }

  ModPoly<F> spoly(const Pair& p) const {
    const ModPoly<F>& a = basis_[p.i].poly;
    const ModPoly<F>& b = basis_[p.j].poly;
    Monomial ma = a.front().mono.quotient_of(p.lcm);
    Monomial mb = b.front().mono.quotient_of(p.lcm);
    ModPoly<F> sa;
    sa.reserve(a.size());
    for (const auto& t : a) sa.push_back(ModTerm<F>{t.mono * ma, t.pos, t.coef});
    return cancel_head(f_, o_, sa, 0, f_.one(), mb, b);
  }

  void insert(ModPoly<F> h, unsigned sugar) {
    make_monic(f_, h);
    std::size_t idx = basis_.size();
    basis_.push_back(Entry{std::move(h), 0, sugar});
    basis_[idx].mask = lead(idx).mono.support_mask();
    const Monomial& lh = lead(idx).mono;
    std::uint32_t ph = lead(idx).pos;

    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (std::size_t g : active_)
      if (lead(g).pos == ph)
        cands.push_back(Cand{g, lh.lcm(lead(g).mono), ideal_case_ && lh.coprime(lead(g).mono)});
    std::vector<char> kept(cands.size(), 0);
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (cands[a].coprime) {
        kept[a] = 1;
        continue;
      }
      bool dominated = false;
      for (std::size_t b = 0; b < cands.size() && !dominated; ++b)
        if (b != a && (b > a || kept[b]) && cands[b].lcm.divides(cands[a].lcm)) dominated = true;
      kept[a] = !dominated;
    }

    std::vector<Pair> next;
    next.reserve(pairs_.size() + cands.size());
    for (auto& p : pairs_) {
      if (p.pos == ph && lh.divides(p.lcm) && lh.lcm(lead(p.i).mono) != p.lcm &&
          lh.lcm(lead(p.j).mono) != p.lcm)
        continue;
      next.push_back(std::move(p));
    }
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (!kept[a] || cands[a].coprime) continue;
      const Cand& c = cands[a];
      unsigned dl = c.lcm.degree();
      unsigned s = std::max(basis_[c.g].sugar + dl - lead(c.g).mono.degree(), sugar + dl - lh.degree());
      next.push_back(Pair{c.g, idx, c.lcm, ph, s});
      ++stats_.pairs_created;
    }
    pairs_ = std::move(next);

    std::vector<std::size_t> still;
    for (std::size_t g : active_)
      if (!(lead(g).pos == ph && lh.divides(lead(g).mono))) still.push_back(g);
    still.push_back(idx);
    active_ = std::move(still);
  }

  const F& f_;
  const ModuleOrder& o_;
  bool ideal_case_;
  std::vector<Entry> basis_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
  GbStats stats_;
};

}  // namespace

template <CoefficientField F>
ModPoly<F> to_modpoly(const ModElement<F>& v, const ModuleOrder& order) {
  ModPoly<F> p;
  for (std::size_t i = 0; i < v.rank(); ++i)
    for (const auto& [m, c] : v[i].terms()) p.push_back(ModTerm<F>{m, static_cast<std::uint32_t>(i), c});
  sort_terms(p, order);
  return p;
}

template <CoefficientField F>
ModElement<F> from_modpoly(const RingPtr<F>& ring, std::size_t rank, const ModPoly<F>& p) {
  std::vector<std::vector<typename Polynomial<F>::Term>> buckets(rank);
  for (const auto& t : p) {
    if (t.pos >= rank) throw std::out_of_range("module term position beyond rank");
    buckets[t.pos].emplace_back(t.mono, t.coef);
  }
  std::vector<Polynomial<F>> coords;
  coords.reserve(rank);
  for (auto& b : buckets) coords.push_back(Polynomial<F>::from_terms(ring, std::move(b)));
  return ModElement<F>(ring, std::move(coords));
}

template <CoefficientField F>
std::vector<ModPoly<F>> groebner_basis(const F& field, std::vector<ModPoly<F>> generators,
                                       const ModuleOrder& order, bool ideal_case) {
  return Engine<F>(field, order, ideal_case).run(std::move(generators));
}

template <CoefficientField F>
ModPoly<F> normal_form(const F& field, ModPoly<F> v, const std::vector<ModPoly<F>>& basis,
                       const ModuleOrder& order) {
  return reduce_with(field, order, std::move(v), 0, [&](const ModTerm<F>& t) -> const ModPoly<F>* {
    for (const auto& g : basis)
      if (g.front().pos == t.pos && g.front().mono.divides(t.mono)) return &g;
    return nullptr;
  });
}

}  // namespace detail

namespace {

template <CoefficientField F>
void check_element(const RingPtr<F>& ring, std::size_t rank, const ModElement<F>& v) {
  if (v.rank() != rank)
    throw std::invalid_argument("element of rank " + std::to_string(v.rank()) + " in a submodule of R^" +
                                std::to_string(rank));
  if (v.ring() && v.ring() != ring && v.ring()->variables() != ring->variables())
    throw RingMismatch("module element over a different ring");
}

}  // namespace

template <CoefficientField F>
Submodule<F>::Submodule(RingPtr<F> ring, std::size_t rank, std::vector<Elem> generators, ModuleOrder order)
    : ring_(std::move(ring)), rank_(rank), order_(order), generators_(std::move(generators)) {
  std::vector<ModPoly<F>> polys;
  for (const auto& g : generators_) {
    check_element(ring_, rank_, g);
    if (!g.is_zero()) polys.push_back(detail::to_modpoly(g, order_));
  }
  gb_ = detail::groebner_basis(ring_->field(), std::move(polys), order_, rank_ == 1);
}

template <CoefficientField F>
std::vector<ModElement<F>> Submodule<F>::basis() const {
  std::vector<Elem> out;
  out.reserve(gb_.size());
  for (const auto& g : gb_) out.push_back(detail::from_modpoly(ring_, rank_, g));
  return out;
}

template <CoefficientField F>
bool Submodule<F>::contains(const Elem& v) const {
  check_element(ring_, rank_, v);
  return detail::normal_form(ring_->field(), detail::to_modpoly(v, order_), gb_, order_).empty();
}

template <CoefficientField F>
ModElement<F> Submodule<F>::normal_form(const Elem& v) const {
  check_element(ring_, rank_, v);
  return detail::from_modpoly(ring_, rank_,
                              detail::normal_form(ring_->field(), detail::to_modpoly(v, order_), gb_, order_));
}

template <CoefficientField F>
InclusionResult<F> check_inclusion(const Submodule<F>& small, const Submodule<F>& big) {
  if (small.rank() != big.rank()) throw std::invalid_argument("inclusion test across different ranks");
  const auto& gens = small.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto nf = big.normal_form(gens[i]);
    if (!nf.is_zero()) return InclusionResult<F>{false, i, gens[i], nf};
  }
  return {};
}

template <CoefficientField F>
EqualityResult<F> submodule_equal(const Submodule<F>& U, const Submodule<F>& V) {
  auto r = check_inclusion(U, V);
  if (!r.holds) return EqualityResult<F>{false, 0, std::move(r)};
  r = check_inclusion(V, U);
  if (!r.holds) return EqualityResult<F>{false, 1, std::move(r)};
  return {};
}

template <CoefficientField F>
Submodule<F> submodule_sum(const Submodule<F>& U, const Submodule<F>& V) {
  if (U.rank() != V.rank()) throw std::invalid_argument("sum of submodules of different ranks");
  auto gens = U.generators();
  const auto& more = V.generators();
  gens.insert(gens.end(), more.begin(), more.end());
  return Submodule<F>(U.ring(), U.rank(), std::move(gens), U.order());
}

template <CoefficientField F>
Submodule<F> intersect(const Submodule<F>& U, const Submodule<F>& V) {
  if (U.rank() != V.rank()) throw std::invalid_argument("intersection of submodules of different ranks");
  const auto& ring = U.ring();
  const F& f = ring->field();
  std::size_t tag = ring->nvars();
  if (tag >= kMaxVars) throw std::length_error("no free variable slot for the elimination tag");
  Monomial t = Monomial::variable(tag);
  ModuleOrder ord = U.order();
  ord.elimination_variable = static_cast<int>(tag);

  std::vector<ModPoly<F>> gens;
  for (const auto& u : U.basis()) {
    ModPoly<F> p;
    for (const auto& term : detail::to_modpoly(u, ord)) p.push_back({term.mono * t, term.pos, term.coef});
    gens.push_back(std::move(p));
  }
  for (const auto& v : V.basis()) {
    ModPoly<F> p;
    for (const auto& term : detail::to_modpoly(v, ord)) {
      p.push_back(term);
      p.push_back({term.mono * t, term.pos, f.neg(term.coef)});
    }
    detail::sort_terms(p, ord);
    gens.push_back(std::move(p));
  }
  auto gb = detail::groebner_basis(f, std::move(gens), ord, U.rank() == 1);
  std::vector<ModElement<F>> out;
  for (const auto& g : gb)
    if (g.front().mono[tag] == 0) out.push_back(detail::from_modpoly(ring, U.rank(), g));
  return Submodule<F>(ring, U.rank(), std::move(out), U.order());
}

template <CoefficientField F>
ModElement<F> ModuleMap<F>::apply(const ModElement<F>& c) const {
  if (c.rank() != columns.size()) throw std::invalid_argument("map applied to a vector of the wrong rank");
  ModElement<F> out(c.ring(), target_rank);
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (!c[i].is_zero()) out += columns[i].scaled(c[i]);
  return out;
}

namespace {

/// Generators (phi(e_i) ; e_i) and (w ; 0) in R^(e + r) under a block order.
template <CoefficientField F>
std::vector<ModPoly<F>> graph_generators(const std::vector<ModElement<F>>& columns, std::size_t e,
                                         const std::vector<ModElement<F>>& extra, const ModuleOrder& ord,
                                         const F& f) {
  std::vector<ModPoly<F>> gens;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    auto p = detail::to_modpoly(columns[i], ord);
    p.push_back({Monomial{}, static_cast<std::uint32_t>(e + i), f.one()});
    gens.push_back(std::move(p));
  }
  for (const auto& w : extra) gens.push_back(detail::to_modpoly(w, ord));
  return gens;
}

template <CoefficientField F>
ModuleOrder block_order(ModuleOrder base, std::size_t e) {
  base.position_block = static_cast<std::uint32_t>(e);
  base.elimination_variable = -1;
  return base;
}

}  // namespace

template <CoefficientField F>
Submodule<F> preimage(const ModuleMap<F>& phi, const Submodule<F>& W) {
  if (phi.target_rank != W.rank()) throw std::invalid_argument("preimage: target rank mismatch");
  const auto& ring = W.ring();
  const F& f = ring->field();
  std::size_t e = phi.target_rank, r = phi.source_rank();
  for (const auto& c : phi.columns) check_element(ring, e, c);
  if (r == 0) return Submodule<F>::zero(ring, 0);
  ModuleOrder ord = block_order<F>(W.order(), e);
  auto gb = detail::groebner_basis(f, graph_generators(phi.columns, e, W.basis(), ord, f), ord, false);
  std::vector<ModElement<F>> out;
  for (const auto& g : gb) {
    if (g.front().pos < e) continue;
    ModPoly<F> shifted = g;
    for (auto& term : shifted) term.pos -= static_cast<std::uint32_t>(e);
    out.push_back(detail::from_modpoly(ring, r, shifted));
  }
  ModuleOrder result_order = W.order();
  result_order.position_block = 0;
  result_order.elimination_variable = -1;
  return Submodule<F>(ring, r, std::move(out), result_order);
}

template <CoefficientField F>
Submodule<F> kernel(const ModuleMap<F>& phi) {
  if (phi.columns.empty()) throw std::invalid_argument("kernel of a map without columns needs a ring");
  return preimage(phi, Submodule<F>::zero(phi.columns.front().ring(), phi.target_rank));
}

template <CoefficientField F>
Submodule<F> intersect_via_syzygies(const Submodule<F>& U, const Submodule<F>& V) {
  if (U.rank() != V.rank()) throw std::invalid_argument("intersection of submodules of different ranks");
  ModuleMap<F> phi{U.rank(), U.basis()};
  if (phi.columns.empty()) return Submodule<F>::zero(U.ring(), U.rank(), U.order());
  auto pre = preimage(phi, V);
  std::vector<ModElement<F>> out;
  for (const auto& c : pre.basis()) out.push_back(phi.apply(c));
  return Submodule<F>(U.ring(), U.rank(), std::move(out), U.order());
}

template <CoefficientField F>
Lifter<F>::Lifter(RingPtr<F> ring, std::size_t rank, std::vector<ModElement<F>> generators,
                  std::vector<ModElement<F>> modulo)
    : ring_(std::move(ring)), rank_(rank), ngens_(generators.size()), order_(block_order<F>({}, rank)) {
  for (const auto& g : generators) check_element(ring_, rank_, g);
  for (const auto& w : modulo) check_element(ring_, rank_, w);
  const F& f = ring_->field();
  gb_ = detail::groebner_basis(f, graph_generators(generators, rank_, modulo, order_, f), order_, false);
}

template <CoefficientField F>
std::optional<std::vector<Polynomial<F>>> Lifter<F>::express(const ModElement<F>& v) const {
  check_element(ring_, rank_, v);
  const F& f = ring_->field();
  auto nf = detail::normal_form(f, detail::to_modpoly(v, order_), gb_, order_);
  std::vector<std::vector<typename Polynomial<F>::Term>> coeffs(ngens_);
  for (const auto& t : nf) {
    if (t.pos < rank_) return std::nullopt;
    coeffs[t.pos - rank_].emplace_back(t.mono, f.neg(t.coef));
  }
  std::vector<Polynomial<F>> out;
  for (auto& c : coeffs) out.push_back(Polynomial<F>::from_terms(ring_, std::move(c)));
  return out;
}

template <CoefficientField F>
QuotientRing<F>::QuotientRing(RingPtr<F> base, std::vector<Polynomial<F>> ideal) : base_(std::move(base)) {
  std::vector<ModElement<F>> gens;
  for (auto& p : ideal) {
    if (p.is_zero()) continue;
    if (p.ring() != base_ && p.ring()->variables() != base_->variables())
      throw RingMismatch("ideal generator over a different ring");
    gens.push_back(ModElement<F>(base_, std::vector<Polynomial<F>>{p}));
    ideal_.push_back(std::move(p));
  }
  ideal_module_ = std::make_shared<const Submodule<F>>(base_, 1, std::move(gens));
}

template <CoefficientField F>
bool QuotientRing<F>::contains(const Polynomial<F>& p) const {
  return ideal_module_->contains(ModElement<F>(base_, std::vector<Polynomial<F>>{p}));
}

template <CoefficientField F>
bool QuotientRing<F>::is_zero_ring() const {
  return contains(Polynomial<F>::constant(base_, base_->field().one()));
}

template <CoefficientField F>
Polynomial<F> QuotientRing<F>::reduce(const Polynomial<F>& p) const {
  return ideal_module_->normal_form(ModElement<F>(base_, std::vector<Polynomial<F>>{p}))[0];
}

template <CoefficientField F>
std::vector<ModElement<F>> QuotientRing<F>::lift_generators(std::size_t rank) const {
  std::vector<ModElement<F>> out;
  for (const auto& g : ideal_)
    for (std::size_t k = 0; k < rank; ++k) {
      ModElement<F> v(base_, rank);
      v[k] = g;
      out.push_back(std::move(v));
    }
  return out;
}

template <CoefficientField F>
std::string QuotientRing<F>::description() const {
  std::string s = base_->description();
  if (ideal_.empty()) return s;
  s += "/(";
  for (std::size_t i = 0; i < ideal_.size(); ++i) s += (i ? ", " : "") + ideal_[i].to_string();
  return s + ")";
}

template <CoefficientField F>
Presentation<F> presentation(const Submodule<F>& U, const Submodule<F>& W, bool drop_redundant) {
  auto inc = check_inclusion(W, U);
  if (!inc.holds) throw std::invalid_argument("presentation: W is not contained in U");
  std::vector<ModElement<F>> gens;
  if (drop_redundant) {
    for (auto& g : U.basis())
      if (!W.contains(g)) gens.push_back(std::move(g));
  } else {
    gens = U.generators();
  }
  if (gens.empty()) return Presentation<F>{{}, Submodule<F>::zero(U.ring(), 0)};
  auto rel = preimage(ModuleMap<F>{U.rank(), gens}, W);
  return Presentation<F>{std::move(gens), std::move(rel)};
}

#define GTS_INSTANTIATE_MODGB(F)                                                                         \
  template ModPoly<F> detail::to_modpoly(const ModElement<F>&, const ModuleOrder&);                     \
  template ModElement<F> detail::from_modpoly(const RingPtr<F>&, std::size_t, const ModPoly<F>&);       \
  template std::vector<ModPoly<F>> detail::groebner_basis(const F&, std::vector<ModPoly<F>>,            \
                                                          const ModuleOrder&, bool);                    \
  template ModPoly<F> detail::normal_form(const F&, ModPoly<F>, const std::vector<ModPoly<F>>&,         \
                                          const ModuleOrder&);                                          \
  template class Submodule<F>;                                                                          \
  template struct ModuleMap<F>;                                                                         \
  template class Lifter<F>;                                                                             \
  template class QuotientRing<F>;                                                                       \
  template InclusionResult<F> check_inclusion(const Submodule<F>&, const Submodule<F>&);                \
  template EqualityResult<F> submodule_equal(const Submodule<F>&, const Submodule<F>&);                 \
  template Submodule<F> submodule_sum(const Submodule<F>&, const Submodule<F>&);                        \
  template Submodule<F> intersect(const Submodule<F>&, const Submodule<F>&);                            \
  template Submodule<F> intersect_via_syzygies(const Submodule<F>&, const Submodule<F>&);               \
  template Submodule<F> preimage(const ModuleMap<F>&, const Submodule<F>&);                             \
  template Submodule<F> kernel(const ModuleMap<F>&);                                                    \
  template Presentation<F> presentation(const Submodule<F>&, const Submodule<F>&, bool);

GTS_INSTANTIATE_MODGB(PrimeField)
GTS_INSTANTIATE_MODGB(RationalField)

}  // namespace gts
