#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "gts/session.hpp"

namespace gts {

/// Expected value at a JSON pointer inside one query report.
struct Pin {
  std::size_t query = 0;
  std::string path;
  nlohmann::json expect;
};

struct CorpusCase {
  std::string id;
  std::string file;
  std::string citation;
  std::string source;  // script text
  bool stretch = false;  // selectable by id, left out of --all
  std::vector<Pin> pins;
};

/// Cases in manifest order, with their scripts, compiled into the binary.
const std::vector<CorpusCase>& corpus_cases();

/// `all` selects every non-stretch case; otherwise the listed ids. Throws std::invalid_argument on an
/// unknown id or an empty selection.
std::vector<const CorpusCase*> select_cases(bool all, const std::vector<std::string>& ids);

struct PinResult {
  Pin pin;
  nlohmann::json actual;
  bool ok = false;
};

struct CaseOutcome {
  const CorpusCase* c = nullptr;
  std::vector<QueryReport> reports;
  std::vector<PinResult> pins;
  bool matched = false;
};

CaseOutcome run_case(const CorpusCase& c, const RunOptions& options);

nlohmann::json corpus_json(const std::vector<CaseOutcome>& outcomes);
std::string corpus_text(const std::vector<CaseOutcome>& outcomes);

}  // namespace gts
