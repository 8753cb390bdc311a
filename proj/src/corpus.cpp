#include "gts/corpus.hpp"

#include <sstream>
#include <stdexcept>

namespace gts {

namespace corpus_data {
// generated from corpus/ at configure time
const std::vector<std::pair<std::string, std::string>>& files();
}  // namespace corpus_data

using nlohmann::json;

namespace {

const std::string& file_text(const std::string& name) {
  for (const auto& [n, text] : corpus_data::files())
    if (n == name) return text;
  throw std::logic_error("corpus file " + name + " is not embedded");
}

std::vector<CorpusCase> load() {
  std::vector<CorpusCase> out;
  auto manifest = json::parse(file_text("manifest.json"));
  for (const auto& c : manifest.at("cases")) {
    CorpusCase k;
    k.id = c.at("id");
    k.file = c.at("file");
    k.citation = c.at("citation");
    k.stretch = c.value("stretch", false);
    k.source = file_text(k.file);
    for (const auto& p : c.at("pins")) k.pins.push_back({p.at("query"), p.at("path"), p.at("expect")});
    out.push_back(std::move(k));
  }
  return out;
}

}  // namespace

const std::vector<CorpusCase>& corpus_cases() {
  static const std::vector<CorpusCase> cases = load();
  return cases;
}

std::vector<const CorpusCase*> select_cases(bool all, const std::vector<std::string>& ids) {
  std::vector<const CorpusCase*> out;
  if (all)
    for (const auto& c : corpus_cases())
      if (!c.stretch) out.push_back(&c);
  for (const auto& id : ids) {
    if (id == "none") continue;
    const CorpusCase* found = nullptr;
    for (const auto& c : corpus_cases())
      if (c.id == id) found = &c;
    if (!found) {
      std::string known;
      for (const auto& c : corpus_cases()) known += (known.empty() ? "" : ", ") + c.id;
      throw std::invalid_argument("unknown corpus case '" + id + "' (known: " + known + ")");
    }
    bool dup = false;
    for (const auto* c : out) dup = dup || c == found;
    if (!dup) out.push_back(found);
  }
  if (out.empty()) throw std::invalid_argument("empty selection: no corpus case selected");
  return out;
}

CaseOutcome run_case(const CorpusCase& c, const RunOptions& options) {
  CaseOutcome out;
  out.c = &c;
  Session session(dsl::parse(c.source));
  out.reports = session.run(options);
  for (auto& r : out.reports) r.json["citation"] = c.citation;
  out.matched = true;
  for (const auto& pin : c.pins) {
    PinResult pr{pin, nullptr, false};
    if (pin.query < out.reports.size()) {
      json::json_pointer ptr(pin.path);
      const auto& j = out.reports[pin.query].json;
      if (j.contains(ptr)) pr.actual = j.at(ptr);
    }
    pr.ok = pr.actual == pin.expect;
    out.matched = out.matched && pr.ok;
    out.pins.push_back(std::move(pr));
  }
  for (const auto& r : out.reports) out.matched = out.matched && !r.failed && !r.mismatch;
  return out;
}

json corpus_json(const std::vector<CaseOutcome>& outcomes) {
  json cases = json::array();
  std::size_t matched = 0;
  for (const auto& o : outcomes) {
    json pins = json::array();
    for (const auto& p : o.pins)
      pins.push_back({{"query", p.pin.query}, {"path", p.pin.path}, {"expect", p.pin.expect}, {"actual", p.actual}, {"ok", p.ok}});
    json queries = json::array();
    for (const auto& r : o.reports) queries.push_back(r.json);
    cases.push_back({{"id", o.c->id},
                     {"file", o.c->file},
                     {"citation", o.c->citation},
                     {"matched", o.matched},
                     {"pins", pins},
                     {"queries", queries}});
    matched += o.matched;
  }
  return {{"schema", 1}, {"cases", cases}, {"summary", {{"cases", outcomes.size()}, {"matched", matched}}}};
}

std::string corpus_text(const std::vector<CaseOutcome>& outcomes) {
  std::ostringstream out;
  std::size_t matched = 0;
  for (const auto& o : outcomes) {
    out << "== " << o.c->id << " (" << o.c->file << ")\n   " << o.c->citation << "\n";
    for (const auto& r : o.reports) out << query_text(r.json);
    for (const auto& p : o.pins)
      if (!p.ok)
        out << "  pin mismatch: query " << p.pin.query << " " << p.pin.path << " expected " << p.pin.expect.dump()
            << ", got " << p.actual.dump() << "\n";
    out << "  => " << (o.matched ? "match" : "MISMATCH") << "\n\n";
    matched += o.matched;
  }
  out << "summary\n";
  for (const auto& o : outcomes) out << "  " << o.c->id << "  " << (o.matched ? "match" : "MISMATCH") << "\n";
  out << matched << "/" << outcomes.size() << " cases match\n";
  return out.str();
}

}  // namespace gts
