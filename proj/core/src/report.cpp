#include "tarski/verify.hpp"

#include "json.hpp"

namespace tarski {

namespace {

using json = nlohmann::ordered_json;

json trialJson(const TrialReport& t) {
  json j;
  j["suite"] = t.suite;
  j["trial"] = t.trial;
  j["proposition"] = t.proposition;
  j["verdict"] = t.verdict;
  json cfg = json::array();
  for (const auto& [name, p] : t.config)
    cfg.push_back({{"name", name}, {"x", p.x.str()}, {"y", p.y.str()}});
  j["config"] = cfg;
  json wit = json::array();
  for (const auto& [name, value] : t.witness)
    wit.push_back({{"name", name}, {"value", value}});
  j["witness"] = wit;
  return j;
}

json suiteJson(const SuiteReport& r) {
  json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["passed"] = r.passed;
  j["skipped"] = r.skipped;
  json fails = json::array();
  for (const TrialReport& t : r.failures) fails.push_back(trialJson(t));
  j["failures"] = fails;
  return j;
}

}  // namespace

std::string reportJson(const SuiteReport& report) {
  return suiteJson(report).dump(2) + "\n";
}

std::string reportJson(const std::vector<SuiteReport>& reports) {
  json arr = json::array();
  for (const SuiteReport& r : reports) arr.push_back(suiteJson(r));
  return arr.dump(2) + "\n";
}

}  // namespace tarski
