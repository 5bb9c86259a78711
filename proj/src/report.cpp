#include <chrono>
#include <ctime>
#include <map>

#include <json.hpp>

#include "ctcsa/harness.hpp"

namespace ctcsa {

using nlohmann::json;

namespace {

json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  json j{{"elements", w->elements}, {"labels", w->labels}, {"note", w->note}};
  j["subgroup"] = w->subgroup ? json(*w->subgroup) : json(nullptr);
  return j;
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string cell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

}  // namespace

std::string emit_json(const std::vector<SuiteRow>& rows, const Config& config, bool timestamp) {
  json j;
  j["version"] = "1";
  j["config_hash"] = config_hash(config);
  j["header"] = {{"timestamp", timestamp ? utc_now() : std::string()}};
  json suites = json::array();
  std::size_t passed = 0;
  std::size_t refutations = 0;
  for (const auto& r : rows) {
    json row{{"suite", r.suite},
             {"subject", r.subject},
             {"check", r.check},
             {"expected", r.expected},
             {"computed", r.computed},
             {"paper_claim", to_string(r.paper_claim)},
             {"witness", witness_json(r.witness)},
             {"anchor", r.anchor},
             {"known_refutation", r.known_refutation},
             {"pass", r.passed()}};
    row["error"] = r.error.empty() ? json(nullptr) : json(r.error);
    suites.push_back(std::move(row));
    passed += r.passed();
    refutations += r.paper_claim == PaperClaim::refutes;
  }
  j["suites"] = std::move(suites);
  j["summary"] = {{"rows", rows.size()},
                  {"passed", passed},
                  {"failed", rows.size() - passed},
                  {"refutations", refutations}};
  return j.dump(2) + "\n";
}

std::string emit_markdown(const std::vector<SuiteRow>& rows) {
  std::vector<std::string> order;
  std::map<std::string, std::vector<const SuiteRow*>> by_suite;
  for (const auto& r : rows) {
    if (!by_suite.contains(r.suite)) order.push_back(r.suite);
    by_suite[r.suite].push_back(&r);
  }
  std::string out;
  for (const auto& name : order) {
    out += "## " + name + "\n\n";
    out += "| subject | check | expected | computed | paper claim | result | anchor |\n";
    out += "|---|---|---|---|---|---|---|\n";
    for (const SuiteRow* r : by_suite[name]) {
      std::string result = r->passed() ? "pass" : "FAIL";
      if (r->known_refutation && r->paper_claim == PaperClaim::refutes) result = "pass (known refutation)";
      if (!r->error.empty()) result = "ERROR: " + r->error;
      out += "| " + cell(r->subject) + " | " + cell(r->check) + " | " + (r->expected ? "true" : "false") + " | " +
             (r->computed ? "true" : "false") + " | " + to_string(r->paper_claim) + " | " + cell(result) + " | " +
             r->anchor + " |\n";
    }
    out += "\n";
  }
  std::size_t passed = 0;
  for (const auto& r : rows) passed += r.passed();
  out += "**" + std::to_string(passed) + " / " + std::to_string(rows.size()) + " rows passed.**\n";
  return out;
}

std::string to_json(const GroupInfo& info) {
  json j{{"recipe", info.recipe},
         {"order", info.order},
         {"abelian", info.abelian},
         {"center_size", info.center_size},
         {"solvable", info.solvable},
         {"simple", info.simple},
         {"ct", info.ct},
         {"csa", info.csa},
         {"maximal_abelian_count", info.maximal_abelian_count}};
  j["monolith_size"] = info.monolith_size ? json(*info.monolith_size) : json(nullptr);
  return j.dump(2) + "\n";
}

}  // namespace ctcsa
