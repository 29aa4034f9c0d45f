#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "coverhom/scenarios.hpp"

using namespace coverhom;

int main(int argc, char** argv) {
  CLI::App app{"verify: exact checks on homology representations of finite graph covers"};
  app.failure_message(CLI::FailureMessage::simple);

  std::string scenario, group, dot_out, json_out;
  std::vector<std::string> images;
  int rank = 0, depth = -1, len_cap = 0;
  long long seed = 0;
  bool all = false;

  app.add_option("--scenario", scenario, "scenario id (see --list)");
  app.add_flag("--all", all, "run the default battery of all scenarios");
  app.add_option("--group", group, "group spec: inline JSON or a path to a JSON file");
  app.add_option("--images", images, "generator images (cycle strings or exponent tuples)");
  app.add_option("--rank", rank, "rank of the free group (number of wedge circles)");
  app.add_option("--depth", depth, "Nielsen-move search depth");
  app.add_option("--len-cap", len_cap, "word length cap for searches (0 = 2*depth+2)");
  app.add_option("--seed", seed, "seed echoed into reports");
  app.add_option("--dot-out", dot_out, "directory for Graphviz exports");
  app.add_option("--json-out", json_out, "write the JSON report array to this file");
  bool list = false;
  app.add_flag("--list", list, "list scenario ids and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  if (list) {
    for (const auto& id : registered_scenarios()) std::cout << id << "\n";
    return 0;
  }
  if ((!all && scenario.empty()) || (all && !scenario.empty())) {
    std::cerr << "exactly one of --scenario or --all is required\n";
    return 2;
  }

  // --group may be a file path.
  if (!group.empty() && std::filesystem::exists(group)) {
    std::ifstream in(group);
    std::stringstream buf;
    buf << in.rdbuf();
    group = buf.str();
  }

  std::vector<ScenarioConfig> battery;
  if (all) {
    battery = default_battery(depth, len_cap, seed);
    for (auto& c : battery) c.dot_out = dot_out;
  } else {
    ScenarioConfig c;
    c.id = scenario;
    c.group_json = group;
    c.images = images;
    c.rank = rank;
    c.depth = depth;
    c.len_cap = len_cap;
    c.seed = seed;
    c.dot_out = dot_out;
    battery.push_back(std::move(c));
  }

  try {
    int code;
    if (json_out.empty()) {
      code = run_all(battery, std::cout, std::cerr);
    } else {
      std::ofstream out(json_out);
      if (!out) {
        std::cerr << "cannot open " << json_out << " for writing\n";
        return 2;
      }
      code = run_all(battery, out, std::cerr);
    }
    return code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
