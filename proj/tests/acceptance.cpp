// Acceptance run: one PASS/FAIL line per criterion, with wall time against its budget.
// Criterion 11 is reported but does not affect the exit code.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "gts/basechange.hpp"
#include "gts/corpus.hpp"
#include "gts/extalg.hpp"
#include "gts/oracle.hpp"
#include "paper_cases.hpp"

using namespace gts;
using namespace gts::testing;
using nlohmann::json;

namespace {

/// Collects failed expectations; a criterion passes when none were recorded.
struct Probe {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

template <CoefficientField F>
ModElement<F> basis_tensor(const RingPtr<F>& R, std::size_t m, const TensorIndex& idx, const std::string& coef) {
  ModElement<F> v(R, tensor_rank(m, idx.size()));
  v[linear_index(idx, m)] = P(R, coef);
  return v;
}

template <CoefficientField F>
bool same_class_up_to_unit(const ModElement<F>& w, const ModElement<F>& u, const Submodule<F>& smaller) {
  const auto& R = w.ring();
  const F& f = R->field();
  for (long c = 1; c < static_cast<long>(f.characteristic()); ++c)
    if (smaller.contains(w - u.scaled(Polynomial<F>::constant(R, f.from_int(c))))) return true;
  return false;
}

template <CoefficientField F>
bool generate_same(const RingPtr<F>& R, std::size_t rank, const std::vector<ModElement<F>>& a,
                   const std::vector<ModElement<F>>& b) {
  return submodule_equal(Submodule<F>(R, rank, a), Submodule<F>(R, rank, b)).equal;
}

template <CoefficientField F>
ModElement<F> random_homogeneous(const RingPtr<F>& R, std::size_t rank, unsigned deg, std::mt19937& rng) {
  ModElement<F> v(R, rank);
  std::uniform_int_distribution<int> coin(0, 2);
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<typename Polynomial<F>::Term> ts;
    for (unsigned a = 0; a <= deg; ++a) {
      if (coin(rng) == 0) continue;
      Monomial mono;
      mono.set(0, a);
      mono.set(1, deg - a);
      ts.emplace_back(mono, random_coef(R->field(), rng));
    }
    v[i] = Polynomial<F>::from_terms(R, std::move(ts));
  }
  return v;
}

const CorpusCase& corpus_case(const std::string& id) {
  for (const auto& c : corpus_cases())
    if (c.id == id) return c;
  throw std::out_of_range("no corpus case " + id);
}

Grading nine_variable_multigrading() {
  Grading g;
  for (int block = 0; block < 3; ++block)
    for (long i = 1; i <= 3; ++i) g.weights.push_back({1, i});
  return g;
}

void criterion_1(Probe& pr) {
  for (unsigned p : {2u, 3u, 5u}) {
    auto t0 = std::chrono::steady_clock::now();
    auto M = cyclic_mod_x(p);
    auto R = M.base();
    TensorSetup<PF> S(M, p);
    auto r = check_injective(S);
    std::string tag = "p=" + std::to_string(p);
    pr.expect(r.verdict == Verdict::Fails, tag + ": injective should fail");
    pr.expect(r.witness && r.witness->verified, tag + ": witness not verified");
    auto g = gamma_presentation(S);
    pr.expect(g.rank == 1 && generate_same(R, 1, g.relations, {V(R, {("x^" + std::to_string(p)).c_str()})}),
              tag + ": Γ relations are not (x^p)");
    auto t = ts_presentation(S);
    pr.expect(t.module.rank == 1 && generate_same(R, 1, t.module.relations, {V(R, {"x"})}), tag + ": TS is not k");
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    pr.expect(s < 1.0, tag + ": over 1 s");
    std::ostringstream n;
    n << tag << " " << std::fixed << std::setprecision(3) << s << " s";
    pr.note(n.str());
  }
}

void criterion_2(Probe& pr) {
  TensorSetup<PF> S(rank_two_char_two(false), 2);
  pr.expect(check_injective(S).verdict == Verdict::Holds, "injective over A should hold");
  const auto& inv = S.invariants().basis();
  const auto& K = S.K().basis();
  pr.expect(inv.size() == K.size() && std::equal(inv.begin(), inv.end(), K.begin()),
            "K and N^S2 differ as reduced bases");

  auto Mx = rank_two_char_two(true);
  auto R = Mx.base();
  TensorSetup<PF> Sx(Mx, 2);
  auto r = check_injective(Sx);
  pr.expect(r.verdict == Verdict::Fails, "injective over A' should fail");
  if (r.witness) {
    auto u = V(R, {"z*s", "0", "0", "z*s"});
    pr.expect(Sx.K().normal_form(r.witness->element) == Sx.K().normal_form(u), "witness normal form differs from zs(e1⊗e1+e2⊗e2)");
    pr.note("witness " + r.witness->description);
  } else {
    pr.expect(false, "no witness");
  }
}

void criterion_3(Probe& pr) {
  auto M = rank_two_char_three();
  auto R = M.base();
  TensorSetup<PF> S(M, 3);
  auto r = check_surjective(S);
  pr.expect(r.verdict == Verdict::Fails, "surjective should fail");
  if (!r.witness) return pr.expect(false, "no witness");
  pr.expect(r.witness->verified, "witness not verified");
  pr.expect(same_class_up_to_unit(r.witness->element, basis_tensor(R, 2, {0, 0, 1}, "s"), S.TS_plus_N()),
            "witness class is not s·m1⊗m1⊗m2");
  pr.note("witness " + r.witness->description);

  auto ex = run_case(corpus_case("ex4.3"), {});
  auto rem = run_case(corpus_case("rem4.4"), {});
  const auto& a = ex.reports[0].json["result"]["surjective"];
  const auto& b = rem.reports[0].json["result"]["surjective"];
  pr.expect(ex.matched && rem.matched, "corpus pins do not match");
  pr.expect(a == b, "p=3 reading of the remark differs from the example");
}

void criterion_4(Probe& pr) {
  pr.expect(check_surjective(rank_three_nine_variables(false), 2).verdict == Verdict::Holds,
            "surjective over A should hold");
  auto M = rank_three_nine_variables(true);
  auto R = M.base();
  pr.expect(M.ring->ideal_generators().size() == 8, "ideal should have the 8 listed generators");
  TensorSetup<PF> S(M, 2);
  auto r = check_surjective(S);
  pr.expect(r.verdict == Verdict::Fails, "surjective over A' should fail");
  if (!r.witness) return pr.expect(false, "no witness");
  pr.expect(same_class_up_to_unit(r.witness->element, basis_tensor(R, 3, {0, 1}, "x1*z2 + y2*z1"), S.TS_plus_N()),
            "witness class is not (x1z2+y2z1)m1⊗m2");
  pr.note("witness " + r.witness->description);
}

void criterion_5(Probe& pr) {
  auto M = rank_two_char_two(false);
  auto R2 = adjoin_variables(M.base(), {"z"});
  auto e = quotient_extension(M.ring, R2, {P(R2, "z*(s+t)")});
  auto rep = check_base_change(M, 2, e);
  pr.expect(rep.injective.verdict == Verdict::Fails, "base change injective should fail");
  if (!rep.injective.witness) return pr.expect(false, "no witness");
  pr.expect(rep.injective.witness->verified, "witness not verified");

  // (m1⊗m1 + m2⊗m2)⊗zs in the coordinates of the TS presentation, mapped to A'
  TensorSetup<PF> S(M, 2);
  auto pres = ts_presentation(S);
  Lifter<PF> lifter(S.base(), S.rank(), pres.generators, S.N().basis());
  auto c = lifter.express(V(M.base(), {"1", "0", "0", "1"}));
  if (!c) return pr.expect(false, "m1⊗m1 + m2⊗m2 is not a symmetric class");
  auto u = e.map(ModElement<PF>(S.base(), std::move(*c))).scaled(P(R2, "z*s"));
  std::vector<ModElement<PF>> rel;
  for (const auto& q : pres.module.relations) rel.push_back(e.map(q));
  auto Rel = lift_to_cover(rel, pres.generators.size(), *e.target);
  pr.expect(!Rel.contains(u), "(m1⊗m1+m2⊗m2)⊗zs vanishes in TS⊗A'");
  pr.expect(Rel.contains(rep.injective.witness->element - u), "witness differs from (m1⊗m1+m2⊗m2)⊗zs");
  pr.expect(rep.diagram.injective == Corroboration::Agrees && rep.diagram.surjective == Corroboration::Agrees,
            "diagram cross-check does not agree");
  pr.note("witness " + rep.injective.witness->description);
}

void criterion_6(Probe& pr) {
  auto M = rank_three_nine_variables(false);
  auto R = M.base();
  auto e = quotient_extension(M.ring, R, nine_variable_ideal(R));
  auto rep = check_base_change(M, 2, e);
  pr.expect(rep.surjective.verdict == Verdict::Fails, "base change surjective should fail");
  if (!rep.surjective.witness) return pr.expect(false, "no witness");
  TensorSetup<PF> S2(extend_module(M, e), 2);
  auto u = basis_tensor(R, 3, {0, 1}, "x1*z2 + y2*z1");
  pr.expect(same_class_up_to_unit(rep.surjective.witness->element, u, S2.TS_plus_N()),
            "witness differs from the non-surjectivity witness over A'");
  pr.expect(rep.diagram.injective == Corroboration::Agrees && rep.diagram.surjective == Corroboration::Agrees,
            "diagram cross-check does not agree");
  pr.note("witness " + rep.surjective.witness->description);
}

void criterion_7(Probe& pr) {
  std::mt19937 rng(4001);
  int runs = 0;
  for (unsigned p : {2u, 3u}) {
    auto R = make_ring(PF(p), {"s", "t"});
    std::uniform_int_distribution<int> nrel(1, 3), deg(1, 2);
    for (int trial = 0; trial < 50; ++trial) {
      PresentedModule<PF> M{make_quotient_ring(R), 2, {}};
      int k = nrel(rng);
      for (int i = 0; i < k; ++i) M.relations.push_back(random_homogeneous(R, 2, static_cast<unsigned>(deg(rng)), rng));
      pr.expect(check_surjective(M, 2).verdict == Verdict::Holds, "fails for " + M.description());
      ++runs;
    }
  }
  pr.note(std::to_string(runs) + " modules");
}

template <CoefficientField F>
void both_hold(Probe& pr, const PresentedModule<F>& M, std::size_t n) {
  TensorSetup<F> S(M, n);
  auto rep = check_canonical(S);
  pr.expect(rep.injective->verdict == Verdict::Holds && rep.surjective->verdict == Verdict::Holds,
            "canonical map not an isomorphism for " + M.description() + ", n=" + std::to_string(n));
}

template <CoefficientField F>
void flat_holds(Probe& pr, const PresentedModule<F>& M, std::size_t n) {
  auto rep = check_base_change(M, n, quotient_extension(M.ring, adjoin_variables(M.base(), {"u"})));
  pr.expect(rep.injective.verdict == Verdict::Holds && rep.surjective.verdict == Verdict::Holds,
            "base change to A[u] not an isomorphism for " + M.description());
}

void criterion_8(Probe& pr) {
  std::mt19937 rng(8);
  int runs = 0;
  for (unsigned p : {2u, 3u, 5u})
    for (std::size_t m = 1; m <= 3; ++m)
      for (std::size_t n = 1; n <= 3; ++n) {
        auto R = make_ring(PF(p), {"s", "t"});
        both_hold(pr, PresentedModule<PF>{make_quotient_ring(R), m, {}}, n);
        // free on another basis: one relation with a unit coordinate kills a generator
        auto v = random_element(R, m + 1, rng);
        v[rng() % (m + 1)] = P(R, "1");
        both_hold(pr, PresentedModule<PF>{make_quotient_ring(R), m + 1, {v}}, n);
        runs += 2;
      }
  auto Q = make_ring(QF(), {"s", "t"});
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n = 1; n <= 3; ++n) {
      both_hold(pr, PresentedModule<QF>{make_quotient_ring(Q), m, {}}, n);
      for (int trial = 0; trial < 2; ++trial) {
        std::size_t k = 1 + rng() % 2;
        PresentedModule<QF> M{make_quotient_ring(Q), m, {}};
        for (std::size_t i = 0; i < k; ++i)
          M.relations.push_back(trial == 0 ? random_homogeneous(Q, m, 1 + rng() % 2, rng) : random_element(Q, m, rng, 2, 2));
        both_hold(pr, M, n);
      }
      runs += 3;
    }
  int flat = 0;
  auto R2 = make_ring(PF(2), {"s", "t"});
  auto R3 = make_ring(PF(3), {"s", "t"});
  for (std::size_t m = 1; m <= 3; ++m) {
    flat_holds(pr, PresentedModule<PF>{make_quotient_ring(R2), m, {}}, 2);
    flat_holds(pr, PresentedModule<PF>{make_quotient_ring(R3), m, {random_element(R3, m, rng)}}, 2);
    flat_holds(pr, PresentedModule<QF>{make_quotient_ring(Q), m, {random_element(Q, m, rng, 2, 2)}}, 2);
    flat += 3;
  }
  for (auto [M, n] : std::vector<std::pair<PresentedModule<PF>, std::size_t>>{
           {rank_two_char_two(false), 2}, {rank_two_char_three(), 3}, {cyclic_mod_x(3), 3}}) {
    flat_holds(pr, M, n);
    ++flat;
  }
  pr.note(std::to_string(runs) + " canonical checks, " + std::to_string(flat) + " flat extensions");
}

void criterion_9(Probe& pr) {
  RunOptions o;
  o.oracle = true;
  int sides = 0, exact = 0;
  for (const auto* c : select_cases(true, {})) {
    auto out = run_case(*c, o);
    pr.expect(out.matched, c->id + ": pins do not match");
    for (const auto& r : out.reports) {
      pr.expect(!r.mismatch && !r.failed, c->id + ": query " + std::to_string(r.index) + " disagrees or failed");
      const auto& res = r.json["result"];
      if (!res.contains("oracle")) continue;
      const auto& orc = res["oracle"];
      pr.expect(orc["status"] == "agrees", c->id + ": oracle " + orc["status"].get<std::string>());
      for (const char* side : {"injective", "surjective"}) {
        if (!orc.contains(side)) continue;
        ++sides;
        if (res[side]["verdict"] != "FAILS") continue;
        bool eq = orc[side].value("defect_at_witness_degree", false);
        pr.expect(eq, c->id + ": first " + side + " defect is not at the witness degree");
        exact += eq;
      }
    }
  }

  OracleOptions mg{nine_variable_multigrading(), 6};
  auto hold = graded_verdict(rank_three_nine_variables(false), 2, mg);
  pr.expect(hold.injective_clean() && hold.surjective_clean(), "multigraded oracle finds a defect over A");
  auto M = rank_three_nine_variables(true);
  auto v = graded_verdict(M, 2, mg);
  TensorSetup<PF> S(M, 2);
  auto rep = check_canonical(S);
  auto compare = [&](const char* side, const CheckResult<PF>& r, const std::optional<std::vector<long>>& defect) {
    if (r.verdict == Verdict::Holds) return pr.expect(!defect, std::string("multigraded ") + side + " defect without a GB witness");
    if (!r.witness) return pr.expect(false, std::string("no ") + side + " witness over A'");
    auto d = tensor_degree(r.witness->element, S.m(), 2, v.grading, v.shifts);
    pr.expect(d && defect && *d == *defect, std::string("multigraded first ") + side + " defect differs from the witness degree");
    if (defect) pr.note(std::string("multigraded ") + side + " defect " + degree_to_string(*defect));
  };
  compare("injective", *rep.injective, v.first_injective_defect);
  compare("surjective", *rep.surjective, v.first_surjective_defect);
  pr.note(std::to_string(sides) + " oracle comparisons, " + std::to_string(exact) + " at the witness degree");
}

void criterion_10(Probe& pr) {
  for (const char* id : {"ex6.4a", "ex6.4b"}) {
    auto out = run_case(corpus_case(id), {});
    pr.expect(out.matched, std::string(id) + ": pins do not match");
  }
  for (unsigned p : {2u, 3u}) {
    auto a = algebra_degreewise_check(cyclic_mod_x(p), p, {1});
    pr.expect(a.degrees.size() == 1 && a.degrees[0].report.injective->verdict == Verdict::Fails,
              "6.4(a) k=1 injective should fail");
  }
  auto b = algebra_degreewise_check(rank_two_char_three(), 3, {1});
  pr.expect(b.degrees.size() == 1 && b.degrees[0].report.surjective->verdict == Verdict::Fails,
            "6.4(b) k=1 surjective should fail");

  // every module declared in the corpus, stretch cases included
  int wedges = 0;
  for (const auto& c : corpus_cases()) {
    auto script = dsl::parse(c.source);
    std::vector<dsl::Statement> extra;
    for (const auto& st : script.statements)
      if (const auto* m = std::get_if<dsl::ModuleDecl>(&st)) {
        dsl::Query q;
        q.kind = dsl::QueryKind::Wedge;
        q.module = m->name;
        extra.push_back(q);
      }
    std::size_t first = script.queries().size();
    script.statements.insert(script.statements.end(), extra.begin(), extra.end());
    Session s(script);
    for (std::size_t i = first; i < s.query_count(); ++i) {
      auto rep = s.run_query(i, {});
      bool ok = !rep.failed && rep.json["result"]["holds"] == true;
      pr.expect(ok, c.id + ": wedge kernel check fails for " + rep.json["module"].get<std::string>());
      ++wedges;
    }
  }

  auto ob = ts_module_structure_obstruction(rank_three_nine_variables(true));
  pr.expect(ob.found() && ob.eta && ob.eta->verified, "no verified η for the quotient nine-variable module");
  int none = 0;
  std::mt19937 rng(710);
  for (unsigned p : {2u, 3u}) {
    auto R = make_ring(PF(p), {"s", "t"});
    for (std::size_t m = 1; m <= 3; ++m) {
      auto r = ts_module_structure_obstruction(PresentedModule<PF>{make_quotient_ring(R), m, {}});
      pr.expect(!r.found() && r.message.find("no obstruction") == 0, "obstruction on a free module");
      ++none;
    }
    for (int trial = 0; trial < 15; ++trial) {
      PresentedModule<PF> two{make_quotient_ring(R), 2, {random_element(R, 2, rng), random_element(R, 2, rng)}};
      auto r = ts_module_structure_obstruction(two);
      pr.expect(!r.found() && r.message.find("no obstruction") == 0, "obstruction on " + two.description());
      ++none;
    }
  }
  pr.note(std::to_string(wedges) + " wedge checks, " + std::to_string(none) + " modules without obstruction");
}

void criterion_11(Probe& pr) {
  auto Mx = rank_three_char_three(true);
  auto R = Mx.base();
  TensorSetup<PF> S(Mx, 3);
  auto r = check_injective(S);
  pr.expect(r.verdict == Verdict::Fails, "injective over A' should fail");
  ModElement<PF> u(R, 27);
  for (std::size_t i = 0; i < 3; ++i) u[linear_index({i, i, i}, 3)] = P(R, "z*s1");
  pr.expect(S.invariants().contains(u) && !S.K().contains(u), "zs1(e1^⊗3+e2^⊗3+e3^⊗3) is not in N^S3 \\ K");
  if (r.witness) {
    pr.expect(r.witness->verified, "witness not verified");
    bool same = same_class_up_to_unit(r.witness->element, u, S.K());
    pr.note(std::string("witness ") + r.witness->description +
            (same ? " (the class of zs1(e1^⊗3+e2^⊗3+e3^⊗3))" : " (another class of N^S3/K)"));
  }
  auto over_a = check_injective(rank_three_char_three(false), 3);
  pr.note("over A: injective " + to_string(over_a.verdict) +
          (over_a.witness ? " with witness " + over_a.witness->description : ""));
}

struct Criterion {
  int id;
  std::string name;
  double budget;
  std::function<void(Probe&)> run;
  bool blocking = true;
};

}  // namespace

int main() {
  std::vector<Criterion> all{
      {1, "cyclic module k[x]/(x): injectivity fails, Γ = k[x]/(x^p), TS = k", 3.0, criterion_1},
      {2, "injectivity lost under A -> A[z]/(z(s+t))", 5.0, criterion_2},
      {3, "non-surjectivity in char 3", 10.0, criterion_3},
      {4, "non-surjectivity after the quotient by I", 60.0, criterion_4},
      {5, "base change not injective", 10.0, criterion_5},
      {6, "base change not surjective", 90.0, criterion_6},
      {7, "two generators: surjective in degree 2", 600.0, criterion_7},
      {8, "free, rational and flat cases are isomorphisms", 600.0, criterion_8},
      {9, "graded oracle agrees with the GB verdicts", 600.0, criterion_9},
      {10, "symmetric algebras, wedge kernel and obstruction", 120.0, criterion_10},
      {11, "stretch: three-generator module in char 3", 1800.0, criterion_11, false},
  };
  bool ok = true;
  for (auto& c : all) {
    Probe pr;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(pr);
    } catch (const std::exception& e) {
      pr.failures.push_back(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s >= c.budget) pr.failures.push_back("over budget");
    bool pass = pr.failures.empty();
    if (!pass && c.blocking) ok = false;
    std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << std::fixed
              << std::setprecision(2) << s << " s, budget " << std::setprecision(0) << c.budget << " s)"
              << (c.blocking ? "" : "  [non-blocking]") << "\n";
    for (const auto& n : pr.notes) std::cout << "    " << n << "\n";
    for (const auto& f : pr.failures) std::cout << "    failed: " << f << "\n";
  }
  return ok ? 0 : 1;
}
