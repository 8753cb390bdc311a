#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gts/corpus.hpp"
#include "gts/dsl.hpp"
#include "gts/session.hpp"

namespace {

constexpr int kOk = 0, kMismatch = 1, kInputError = 2;

struct Flags {
  std::string order = "degrevlex";
  unsigned dmax = 6;
  std::size_t guardrail = gts::kDefaultGuardrail;
  bool oracle = false;
  bool verify = true;
  bool parallel = false;
  bool timing = false;
  bool json = false;
};

void add_flags(CLI::App* app, Flags& f) {
  app->add_option("--order", f.order, "monomial order: degrevlex, deglex or lex, prefixed with pot- for position over term")
      ->capture_default_str();
  app->add_option("--dmax", f.dmax, "degree bound for the graded oracle")->capture_default_str();
  app->add_option("--guardrail", f.guardrail, "largest ambient rank m^n allowed")->capture_default_str();
  app->add_flag("--oracle", f.oracle, "run the graded oracle next to every canonical-map check");
  app->add_flag("--witness-verify,!--no-witness-verify", f.verify, "re-verify every witness (default on)");
  app->add_flag("--parallel", f.parallel, "run queries concurrently; output order is unchanged");
  app->add_flag("--timing", f.timing, "include wall-clock times in the report");
  app->add_flag("--json", f.json, "print the report as JSON (schema 1)");
}

gts::RunOptions to_options(const Flags& f) {
  gts::RunOptions o;
  std::string name = f.order;
  if (name.rfind("pot-", 0) == 0) {
    o.order.position_over_term = true;
    name = name.substr(4);
  } else if (name.rfind("top-", 0) == 0) {
    name = name.substr(4);
  }
  o.order.monomial = gts::parse_monomial_order(name);
  o.dmax = f.dmax;
  o.guardrail = f.guardrail;
  o.oracle = f.oracle;
  o.verify_witness = f.verify;
  o.parallel = f.parallel;
  o.timing = f.timing;
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_script(const std::string& path, const Flags& flags) {
  gts::RunOptions options;
  std::vector<gts::QueryReport> reports;
  try {
    options = to_options(flags);
    gts::Session session(gts::dsl::parse(read_file(path)));
    reports = session.run(options);
  } catch (const gts::ParseError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return kInputError;
  }
  if (flags.json)
    std::cout << gts::report_json(reports).dump(2) << "\n";
  else
    std::cout << gts::report_text(reports);
  for (const auto& r : reports)
    if (r.failed || r.mismatch) return kMismatch;
  return kOk;
}

int run_corpus(bool all, const std::vector<std::string>& ids, const Flags& flags) {
  std::vector<const gts::CorpusCase*> selected;
  gts::RunOptions options;
  try {
    options = to_options(flags);
    selected = gts::select_cases(all, ids);
  } catch (const std::invalid_argument& e) {
    std::cerr << "gts corpus: " << e.what() << "\n";
    return kInputError;
  }
  std::vector<gts::CaseOutcome> outcomes;
  for (const auto* c : selected) outcomes.push_back(gts::run_case(*c, options));
  if (flags.json)
    std::cout << gts::corpus_json(outcomes).dump(2) << "\n";
  else
    std::cout << gts::corpus_text(outcomes);
  for (const auto& o : outcomes)
    if (!o.matched) return kMismatch;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Divided powers versus symmetric tensors: canonical-map and base-change checks"};
  app.require_subcommand(1);

  Flags flags;
  std::string script;
  auto* run = app.add_subcommand("run", "run the queries of a .gts script");
  run->add_option("file", script, "script file")->required();
  add_flags(run, flags);

  bool all = false, list = false;
  std::vector<std::string> ids;
  std::string show;
  auto* corpus = app.add_subcommand("corpus", "run built-in cases and compare against their pinned verdicts");
  corpus->add_flag("--all", all, "every case except the stretch ones");
  corpus->add_option("--case", ids, "case id, repeatable");
  corpus->add_flag("--list", list, "list the cases");
  corpus->add_option("--show", show, "print the script of a case");
  add_flags(corpus, flags);

  std::string fmt_file;
  auto* fmt = app.add_subcommand("fmt", "parse a script and print it in canonical form");
  fmt->add_option("file", fmt_file, "script file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  if (*run) return run_script(script, flags);
  if (*corpus) {
    if (list) {
      for (const auto& c : gts::corpus_cases())
        std::cout << c.id << (c.stretch ? " (stretch)" : "") << "  " << c.citation << "\n";
      return kOk;
    }
    if (!show.empty()) {
      for (const auto& c : gts::corpus_cases())
        if (c.id == show) {
          std::cout << c.source;
          return kOk;
        }
      std::cerr << "gts corpus: unknown corpus case '" << show << "'\n";
      return kInputError;
    }
    return run_corpus(all, ids, flags);
  }
  try {
    std::cout << gts::dsl::print(gts::dsl::parse(read_file(fmt_file)));
  } catch (const gts::ParseError& e) {
    std::cerr << fmt_file << ":" << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
