#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "coverhom/group.hpp"

namespace coverhom {

// Configuration for one named verification scenario.  Empty/zero fields fall
// back to the scenario's documented defaults.
struct ScenarioConfig {
  std::string id;
  std::string group_json;   // group spec ("" = scenario default)
  std::vector<std::string> images;  // generator images ("" = preferred generators)
  int rank = 0;             // 0 = scenario default
  int depth = -1;           // -1 = scenario default
  int len_cap = 0;          // 0 = 2*depth+2
  long long seed = 0;       // echoed; scenarios are deterministic
  std::string dot_out;      // directory for graph exports ("" = none)
};

// Machine-readable scenario outcome.  Negative (non-existence) results are
// always "bounded-pass" and carry the search bounds; "fail" marks a violated
// exact assertion.
struct Report {
  std::string scenario;
  std::string verdict;      // "pass" | "bounded-pass" | "fail"
  nlohmann::ordered_json body;
  bool ok() const { return verdict != "fail"; }
};

const std::vector<std::string>& registered_scenarios();

// Throws std::invalid_argument on malformed configs (unknown id, bad group
// spec); assertion failures are reported in the verdict instead.
Report run_scenario(const ScenarioConfig& cfg);

// One config per example documented for the scenarios; depth/len/seed
// overrides apply where a scenario takes them (0/-1 = keep defaults).
std::vector<ScenarioConfig> default_battery(int depth = -1, int len_cap = 0, long long seed = 0);

// Runs the configs in order, streaming a JSON array to `out` and a one-line
// human summary per scenario to `err`.  Returns 0 if every verdict is pass
// or bounded-pass, 1 otherwise.
int run_all(const std::vector<ScenarioConfig>& cfgs, std::ostream& out, std::ostream& err);

}  // namespace coverhom
