#pragma once

#include <json.hpp>
#include <memory>
#include <string>
#include <vector>

#include "gts/dsl.hpp"
#include "gts/modgb.hpp"
#include "gts/tensoralg.hpp"

namespace gts {

struct RunOptions {
  ModuleOrder order{};
  unsigned dmax = 6;
  std::size_t guardrail = kDefaultGuardrail;
  bool oracle = false;  // run graded_verdict next to every canonical-map check
  bool verify_witness = true;
  bool parallel = false;
  bool timing = false;
};

struct QueryReport {
  std::size_t index = 0;
  nlohmann::json json;
  bool failed = false;    // guardrail or internal error; the run continues
  bool mismatch = false;  // oracle disagreement
};

/// The objects declared by a script, built once; queries run against them.
class Session {
 public:
  /// Evaluates every declaration. Throws ParseError (with position) or std::invalid_argument.
  explicit Session(const dsl::Script& script);
  ~Session();
  Session(Session&&) noexcept;

  std::vector<QueryReport> run(const RunOptions& options) const;
  QueryReport run_query(std::size_t index, const RunOptions& options) const;
  std::size_t query_count() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

nlohmann::json report_json(const std::vector<QueryReport>& reports);
std::string report_text(const std::vector<QueryReport>& reports);
std::string query_text(const nlohmann::json& q);

}  // namespace gts
