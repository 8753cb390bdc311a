#include "gts/session.hpp"

#include <chrono>
#include <future>
#include <map>
#include <sstream>

#include "gts/basechange.hpp"
#include "gts/extalg.hpp"
#include "gts/gammats.hpp"
#include "gts/oracle.hpp"

namespace gts {

using nlohmann::json;

namespace {

template <CoefficientField F>
struct Objects {
  std::map<std::string, QuotientRingPtr<F>> rings;
  std::map<std::string, std::vector<Polynomial<F>>> ideals;
  std::map<std::pair<std::string, std::string>, BaseExtension<F>> extensions;
  std::map<std::string, PresentedModule<F>> modules;
  std::map<std::string, std::string> module_ring;
  std::map<std::string, Grading> gradings;
};

template <CoefficientField F>
json coords_json(const ModElement<F>& v) {
  json out = json::array();
  for (const auto& c : v.coords()) out.push_back(c.to_string());
  return out;
}

template <CoefficientField F>
json witness_json(const Witness<F>& w) {
  json j{{"description", w.description},
         {"element", coords_json(w.element)},
         {"certificate", coords_json(w.certificate)},
         {"verified", w.verified}};
  j["orbit"] = w.orbit ? json(describe_orbit(*w.orbit)) : json(nullptr);
  return j;
}

template <CoefficientField F>
json check_json(const CheckResult<F>& r, const RunOptions& o) {
  json j{{"verdict", to_string(r.verdict)}};
  if (!r.note.empty()) j["note"] = r.note;
  j["witness"] = r.witness ? witness_json(*r.witness) : json(nullptr);
  if (o.timing) j["seconds"] = r.seconds;
  return j;
}

template <CoefficientField F>
json module_json(const PresentedModule<F>& M) {
  json rel = json::array();
  for (const auto& r : M.relations) rel.push_back(coords_json(r));
  return {{"ring", M.ring->description()}, {"rank", M.rank}, {"relations", rel}};
}

json degree_json(const std::optional<std::vector<long>>& d) { return d ? json(*d) : json(nullptr); }

json oracle_json(const GradedVerdict& v) {
  json rows = json::array();
  for (const auto& r : v.rows)
    rows.push_back({{"degree", r.degree},
                    {"tensor_dim", r.tensor_dim},
                    {"fixed_dim", r.fixed_dim},
                    {"image_dim", r.image_dim},
                    {"gamma_dim", r.gamma_dim},
                    {"invariant_dim", r.invariant_dim},
                    {"k_dim", r.k_dim},
                    {"injective_defect", r.injective_defect()},
                    {"surjective_defect", r.surjective_defect()}});
  return {{"grading", v.grading.weights},
          {"shifts", v.shifts},
          {"d_max", v.d_max},
          {"finest_rank", v.finest_rank},
          {"rows", rows},
          {"first_injective_defect", degree_json(v.first_injective_defect)},
          {"first_surjective_defect", degree_json(v.first_surjective_defect)}};
}

template <CoefficientField F>
json canonical_json(const CanonicalMapReport<F>& r, const RunOptions& o) {
  json j{{"zero_module", r.zero_module}};
  if (r.injective) j["injective"] = check_json(*r.injective, o);
  if (r.surjective) j["surjective"] = check_json(*r.surjective, o);
  return j;
}

/// Oracle next to the GB verdicts: a GB failure with witness in degree ≤ d_max needs a defect no later
/// than the witness, and a GB success needs no defect at all.
template <CoefficientField F>
json oracle_cross_check(const TensorSetup<F>& S, const CanonicalMapReport<F>& rep, const RunOptions& o,
                        bool& mismatch) {
  GradedVerdict v;
  try {
    v = graded_verdict(S.module(), S.n(), OracleOptions{std::nullopt, o.dmax});
  } catch (const InhomogeneousInput& e) {
    return {{"status", "skipped"}, {"reason", e.what()}};
  }
  json j{{"d_max", o.dmax}, {"shifts", v.shifts}};
  bool agrees = true;
  auto side = [&](const char* name, const std::optional<CheckResult<F>>& r, const std::optional<std::vector<long>>& defect) {
    if (!r) return;
    json s{{"first_defect", degree_json(defect)}};
    if (r->verdict == Verdict::Holds) {
      agrees = agrees && !defect;
    } else if (r->witness) {
      auto wd = tensor_degree(r->witness->element, S.m(), S.n(), v.grading, v.shifts);
      s["witness_degree"] = degree_json(wd);
      if (wd && (*wd)[0] <= static_cast<long>(o.dmax)) agrees = agrees && defect && (*defect)[0] <= (*wd)[0];
      if (wd && defect) s["defect_at_witness_degree"] = *wd == *defect;
    }
    j[name] = s;
  };
  side("injective", rep.injective, v.first_injective_defect);
  side("surjective", rep.surjective, v.first_surjective_defect);
  j["status"] = agrees ? "agrees" : "disagrees";
  mismatch = mismatch || !agrees;
  return j;
}

template <CoefficientField F>
json presentation_json(const TensorSetup<F>& S) {
  auto g = gamma_presentation(S);
  auto t = ts_presentation(S);
  json gens = json::array();
  for (const auto& x : t.generators) gens.push_back(describe_tensor(x, S.m(), S.n()));
  return {{"gamma", module_json(g)}, {"ts", module_json(t.module)}, {"ts_generators", gens}};
}

template <CoefficientField F>
json run_on(const Objects<F>& objs, const dsl::Query& q, const RunOptions& o, bool& mismatch) {
  CheckOptions co{o.guardrail, o.verify_witness, o.order};
  const auto& M = objs.modules.at(q.module);
  json result;
  switch (q.kind) {
    case dsl::QueryKind::Canonical:
    case dsl::QueryKind::Injective:
    case dsl::QueryKind::Surjective: {
      TensorSetup<F> S(M, q.n, co);
      auto rep = check_canonical(S, q.kind != dsl::QueryKind::Surjective, q.kind != dsl::QueryKind::Injective);
      result = canonical_json(rep, o);
      if (o.oracle) result["oracle"] = oracle_cross_check(S, rep, o, mismatch);
      break;
    }
    case dsl::QueryKind::BaseChange: {
      const auto& e = objs.extensions.at({objs.module_ring.at(q.module), q.target});
      auto rep = check_base_change(M, q.n, e, co);
      const auto& d = rep.diagram;
      auto side = [&](const CanonicalMapReport<F>& r) {
        return json{{"injective", to_string(r.injective->verdict)}, {"surjective", to_string(r.surjective->verdict)}};
      };
      auto implied = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
      result = {{"extension", e.description()},
                {"injective", check_json(rep.injective, o)},
                {"surjective", check_json(rep.surjective, o)},
                {"diagram",
                 {{"source", side(d.source_side)},
                  {"target", side(d.target_side)},
                  {"implied_injective", implied(d.implied_injective)},
                  {"implied_surjective", implied(d.implied_surjective)},
                  {"injective", to_string(d.injective)},
                  {"surjective", to_string(d.surjective)},
                  {"injective_reason", d.injective_reason},
                  {"surjective_reason", d.surjective_reason}}}};
      break;
    }
    case dsl::QueryKind::SymPower: {
      auto rep = algebra_degreewise_check(M, q.n, q.powers, co);
      json degrees = json::array();
      for (const auto& d : rep.degrees) {
        json x = canonical_json(d.report, o);
        x["k"] = d.k;
        degrees.push_back(x);
      }
      result = {{"degrees", degrees},
                {"algebra_not_injective", rep.algebra_not_injective},
                {"algebra_not_surjective", rep.algebra_not_surjective}};
      break;
    }
    case dsl::QueryKind::Wedge: {
      auto r = wedge_kernel_check(M, co);
      result = {{"diagonal_is_orbit_span", r.diagonal_is_orbit_span},
                {"contained_in_L", r.contained_in_L},
                {"kernel_equals_image", r.kernel_equals_image},
                {"kernel_is_proper", r.kernel_is_proper},
                {"holds", r.holds()}};
      break;
    }
    case dsl::QueryKind::Obstruction: {
      auto r = ts_module_structure_obstruction(M, co);
      result = {{"found", r.found()}, {"message", r.message}};
      result["eta"] = r.eta ? witness_json(*r.eta) : json(nullptr);
      break;
    }
    case dsl::QueryKind::Oracle: {
      OracleOptions oo{std::nullopt, q.dmax ? *q.dmax : o.dmax};
      if (!q.grading.empty()) oo.grading = objs.gradings.at(q.grading);
      result = oracle_json(graded_verdict(M, q.n, oo));
      break;
    }
    case dsl::QueryKind::Present:
      result = presentation_json(TensorSetup<F>(M, q.n, co));
      break;
  }
  return result;
}

template <CoefficientField F>
Polynomial<F> eval(const PolyExpr& e, const RingPtr<F>& R) {
  return evaluate(e, R);
}

template <CoefficientField F>
std::vector<Polynomial<F>> eval_all(const std::vector<PolyExpr>& es, const RingPtr<F>& R) {
  std::vector<Polynomial<F>> out;
  for (const auto& e : es) out.push_back(eval(e, R));
  return out;
}

}  // namespace

struct Session::Impl {
  dsl::Script script;
  std::vector<const dsl::Query*> queries;
  Objects<PrimeField> pf;
  Objects<RationalField> qf;
  std::map<std::string, dsl::FieldSpec> fields;
  std::map<std::string, bool> rational;  // by ring or module name

  template <typename Fn>
  auto with(const std::string& name, Fn&& fn) {
    return rational.at(name) ? fn(qf) : fn(pf);
  }
  template <typename Fn>
  auto with(const std::string& name, Fn&& fn) const {
    return rational.at(name) ? fn(qf) : fn(pf);
  }

  void declare(const dsl::FieldDecl& d) { fields[d.name] = d.field; }

  void declare(const dsl::RingDecl& d) {
    if (d.field) {
      dsl::FieldSpec f = d.field->kind == dsl::FieldSpec::Kind::Named ? fields.at(d.field->name) : *d.field;
      rational[d.name] = f.kind == dsl::FieldSpec::Kind::Rational;
      if (rational[d.name])
        qf.rings[d.name] = make_quotient_ring(make_ring(RationalField(), d.variables));
      else
        pf.rings[d.name] = make_quotient_ring(make_ring(PrimeField(static_cast<std::uint32_t>(f.modulus)), d.variables));
      return;
    }
    rational[d.name] = rational.at(d.base);
    with(d.base, [&](auto& objs) {
      const auto& A = objs.rings.at(d.base);
      auto ideal = A->ideal_generators();
      auto extra = d.quotient.name.empty() ? eval_all(d.quotient.generators, A->base()) : objs.ideals.at(d.quotient.name);
      ideal.insert(ideal.end(), extra.begin(), extra.end());
      objs.rings[d.name] = make_quotient_ring(A->base(), std::move(ideal));
      return 0;
    });
  }

  void declare(const dsl::IdealDecl& d) {
    rational[d.name] = rational.at(d.ring);
    with(d.ring, [&](auto& objs) {
      objs.ideals[d.name] = eval_all(d.generators, objs.rings.at(d.ring)->base());
      return 0;
    });
  }

  void declare(const dsl::ExtendDecl& d) {
    rational[d.name] = rational.at(d.source);
    with(d.source, [&](auto& objs) {
      const auto& A = objs.rings.at(d.source);
      auto R2 = d.new_variables.empty() ? A->base() : adjoin_variables(A->base(), d.new_variables);
      auto plain = quotient_extension(A, R2);
      decltype(eval_all(std::vector<PolyExpr>{}, R2)) extra;
      if (d.quotient) {
        if (d.quotient->name.empty()) {
          extra = eval_all(d.quotient->generators, R2);
        } else {
          for (const auto& g : objs.ideals.at(d.quotient->name)) extra.push_back(plain.map(g));
        }
      }
      auto e = quotient_extension(A, R2, std::move(extra));
      objs.rings[d.name] = e.target;
      objs.extensions.emplace(std::make_pair(d.source, d.name), std::move(e));
      return 0;
    });
  }

  void declare(const dsl::ModuleDecl& d) {
    rational[d.name] = rational.at(d.ring);
    with(d.ring, [&](auto& objs) {
      using F = std::decay_t<decltype(objs.rings.at(d.ring)->base()->field())>;
      if (!d.source_module.empty()) {
        const auto& e = objs.extensions.at({objs.module_ring.at(d.source_module), d.ring});
        objs.modules.emplace(d.name, extend_module(objs.modules.at(d.source_module), e));
      } else {
        const auto& A = objs.rings.at(d.ring);
        PresentedModule<F> M{A, d.rank, {}};
        for (const auto& row : d.relations) M.relations.emplace_back(A->base(), eval_all(row, A->base()));
        M.validate();
        objs.modules.emplace(d.name, std::move(M));
      }
      objs.module_ring[d.name] = d.ring;
      return 0;
    });
  }

  void declare(const dsl::GradingDecl& d) {
    rational[d.name] = rational.at(d.ring);
    with(d.ring, [&](auto& objs) {
      objs.gradings[d.name] = Grading{d.weights};
      return 0;
    });
  }

  void declare(const dsl::Query&) {}
};

Session::Session(const dsl::Script& script) : impl_(std::make_unique<Impl>()) {
  impl_->script = script;
  for (const auto& s : impl_->script.statements) std::visit([&](const auto& d) { impl_->declare(d); }, s);
  impl_->queries = impl_->script.queries();
}

Session::~Session() = default;
Session::Session(Session&&) noexcept = default;

std::size_t Session::query_count() const { return impl_->queries.size(); }

QueryReport Session::run_query(std::size_t index, const RunOptions& o) const {
  const dsl::Query& q = *impl_->queries.at(index);
  QueryReport rep;
  rep.index = index;
  json& j = rep.json;
  j["index"] = index;
  j["statement"] = dsl::print(dsl::Statement(q));
  j["kind"] = dsl::to_string(q.kind);
  j["module"] = q.module;
  j["n"] = q.n;
  impl_->with(q.module, [&](const auto& objs) {
    j["presentation"] = module_json(objs.modules.at(q.module));
    return 0;
  });
  GbStats before = thread_gb_stats();
  auto t0 = std::chrono::steady_clock::now();
  try {
    j["result"] = impl_->with(q.module, [&](const auto& objs) { return run_on(objs, q, o, rep.mismatch); });
  } catch (const GuardrailExceeded& e) {
    rep.failed = true;
    j["error"] = {{"type", "guardrail"}, {"message", e.what()}};
  } catch (const InhomogeneousInput& e) {
    rep.failed = true;
    j["error"] = {{"type", "inhomogeneous"}, {"message", e.what()}};
  } catch (const std::exception& e) {
    rep.failed = true;
    j["error"] = {{"type", "internal"}, {"message", e.what()}};
  }
  GbStats after = thread_gb_stats();
  j["gb"] = {{"runs", after.runs - before.runs},
             {"pairs_created", after.pairs_created - before.pairs_created},
             {"pairs_reduced", after.pairs_reduced - before.pairs_reduced},
             {"zero_reductions", after.zero_reductions - before.zero_reductions}};
  if (o.timing) j["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<QueryReport> Session::run(const RunOptions& o) const {
  std::vector<QueryReport> out;
  if (!o.parallel) {
    for (std::size_t i = 0; i < query_count(); ++i) out.push_back(run_query(i, o));
    return out;
  }
  std::vector<std::future<QueryReport>> jobs;
  for (std::size_t i = 0; i < query_count(); ++i)
    jobs.push_back(std::async(std::launch::async, [this, i, &o] { return run_query(i, o); }));
  for (auto& f : jobs) out.push_back(f.get());
  return out;
}

json report_json(const std::vector<QueryReport>& reports) {
  json q = json::array();
  for (const auto& r : reports) q.push_back(r.json);
  return {{"schema", 1}, {"queries", q}};
}

namespace {

void text_check(std::ostringstream& out, const std::string& label, const json& c, const std::string& indent) {
  out << indent << label << ": " << c["verdict"].get<std::string>();
  if (c.contains("seconds")) out << " (" << c["seconds"].get<double>() << " s)";
  out << "\n";
  if (c.contains("note")) out << indent << "  note: " << c["note"].get<std::string>() << "\n";
  if (!c["witness"].is_null()) {
    const auto& w = c["witness"];
    out << indent << "  witness: " << w["description"].get<std::string>() << "\n";
    if (!w["orbit"].is_null()) out << indent << "  orbit: " << w["orbit"].get<std::string>() << "\n";
    out << indent << "  verified: " << (w["verified"].get<bool>() ? "yes" : "no") << "\n";
  }
}

void text_canonical(std::ostringstream& out, const json& r, const std::string& indent) {
  if (r["zero_module"].get<bool>()) out << indent << "module is zero\n";
  if (r.contains("injective")) text_check(out, "injective", r["injective"], indent);
  if (r.contains("surjective")) text_check(out, "surjective", r["surjective"], indent);
}

std::string deg(const json& d) {
  if (d.is_null()) return "none";
  std::vector<long> v = d.get<std::vector<long>>();
  return degree_to_string(v);
}

}  // namespace

std::string query_text(const json& q) {
  std::ostringstream out;
  out << "[" << q["index"].get<std::size_t>() << "] " << q["statement"].get<std::string>() << "\n";
  if (q.contains("error")) {
    out << "  error (" << q["error"]["type"].get<std::string>() << "): " << q["error"]["message"].get<std::string>()
        << "\n";
    return out.str();
  }
  const json& r = q["result"];
  std::string kind = q["kind"];
  if (kind == "canonical" || kind == "injective" || kind == "surjective") {
    text_canonical(out, r, "  ");
    if (r.contains("oracle")) {
      const auto& o = r["oracle"];
      out << "  oracle: " << o["status"].get<std::string>();
      if (o.contains("reason")) out << " (" << o["reason"].get<std::string>() << ")";
      for (const char* side : {"injective", "surjective"})
        if (o.contains(side)) out << "; " << side << " first defect " << deg(o[side]["first_defect"]);
      out << "\n";
    }
  } else if (kind == "basechange") {
    out << "  extension: " << r["extension"].get<std::string>() << "\n";
    text_check(out, "injective", r["injective"], "  ");
    text_check(out, "surjective", r["surjective"], "  ");
    const auto& d = r["diagram"];
    out << "  diagram: injective " << d["injective"].get<std::string>() << ", surjective "
        << d["surjective"].get<std::string>() << "\n";
  } else if (kind == "sympower") {
    for (const auto& d : r["degrees"]) {
      out << "  k=" << d["k"].get<std::size_t>() << "\n";
      text_canonical(out, d, "    ");
    }
    out << "  algebra not injective: " << (r["algebra_not_injective"].get<bool>() ? "yes" : "no")
        << ", not surjective: " << (r["algebra_not_surjective"].get<bool>() ? "yes" : "no") << "\n";
  } else if (kind == "wedge") {
    for (const char* k : {"diagonal_is_orbit_span", "contained_in_L", "kernel_equals_image", "kernel_is_proper", "holds"})
      out << "  " << k << ": " << (r[k].get<bool>() ? "yes" : "no") << "\n";
  } else if (kind == "obstruction") {
    out << "  " << r["message"].get<std::string>() << "\n";
  } else if (kind == "oracle") {
    out << "  degree  T^n(M)  TS^n(M)  image  Γ^n(M)  inv  K  inj-defect  surj-defect\n";
    for (const auto& row : r["rows"])
      out << "  " << deg(row["degree"]) << "  " << row["tensor_dim"] << "  " << row["fixed_dim"] << "  "
          << row["image_dim"] << "  " << row["gamma_dim"] << "  " << row["invariant_dim"] << "  " << row["k_dim"]
          << "  " << row["injective_defect"] << "  " << row["surjective_defect"] << "\n";
    out << "  first injective defect: " << deg(r["first_injective_defect"]) << ", first surjective defect: "
        << deg(r["first_surjective_defect"]) << "\n";
  } else if (kind == "present") {
    for (const char* which : {"gamma", "ts"}) {
      const auto& m = r[which];
      out << "  " << (which == std::string("gamma") ? "Γ" : "TS") << "^n(M) = coker " << m["ring"].get<std::string>()
          << "^" << m["rank"] << " by " << m["relations"].size() << " relations\n";
      if (m["relations"].size() <= 8)
        for (const auto& rel : m["relations"]) {
          std::vector<std::string> xs = rel.get<std::vector<std::string>>();
          std::string line;
          for (std::size_t i = 0; i < xs.size(); ++i) line += (i ? ", " : "") + xs[i];
          out << "    (" << line << ")\n";
        }
    }
    for (const auto& g : r["ts_generators"]) out << "    generator " << g.get<std::string>() << "\n";
  }
  if (q.contains("seconds")) out << "  time: " << q["seconds"].get<double>() << " s\n";
  return out.str();
}

std::string report_text(const std::vector<QueryReport>& reports) {
  std::string s;
  for (const auto& r : reports) s += query_text(r.json);
  return s;
}

}  // namespace gts
