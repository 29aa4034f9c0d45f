#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "coverhom/scenarios.hpp"

using namespace coverhom;

namespace {
ScenarioConfig cfg(const std::string& id, const std::string& group = "", int rank = 0,
                   int depth = -1) {
  ScenarioConfig c;
  c.id = id;
  c.group_json = group;
  c.rank = rank;
  c.depth = depth;
  return c;
}
}  // namespace

TEST_CASE("unknown scenario id") {
  CHECK_THROWS_AS(run_scenario(cfg("nope")), std::invalid_argument);
}

TEST_CASE("gaschuetz scenario") {
  auto r = run_scenario(cfg("gaschuetz"));
  CHECK(r.verdict == "pass");
  CHECK(r.body["witnesses"]["dim"] == 5);

  auto s3 = run_scenario(cfg("gaschuetz", R"gg({"perm_generators":["(1 2)","(1 2 3)"]})gg", 2));
  CHECK(s3.verdict == "pass");
  CHECK(s3.body["witnesses"]["dim"] == 7);

  auto z6 = run_scenario(cfg("gaschuetz", R"({"abelian_invariants":[6]})", 3));
  CHECK(z6.verdict == "pass");
  CHECK(z6.body["witnesses"]["dim"] == 13);
}

TEST_CASE("reports are byte-identical across runs") {
  auto a = run_scenario(cfg("gaschuetz"));
  auto b = run_scenario(cfg("gaschuetz"));
  CHECK(a.body.dump() == b.body.dump());
  CHECK(a.body["schema"] == 1);
}

TEST_CASE("primitive span scenario") {
  auto r = run_scenario(cfg("primitive-span", "", 0, 2));
  CHECK(r.verdict == "pass");
  CHECK(r.body["witnesses"]["failures"].empty());
  CHECK(r.body["witnesses"]["primitives_checked"].get<int>() > 0);
}

TEST_CASE("commutator span scenario") {
  auto ab = run_scenario(cfg("commutator-span"));
  CHECK(ab.verdict == "pass");
  CHECK(ab.body["witnesses"]["dim"] == 3);  // |G| - 1

  auto s3 = run_scenario(cfg("commutator-span", R"gg({"perm_generators":["(1 2)","(1 2 3)"]})gg"));
  CHECK(s3.verdict == "pass");
  CHECK(s3.body["witnesses"]["dim"] == 1);  // [G:K] - [G:H] = 2 - 1

  auto triv = run_scenario(cfg("commutator-span", R"({"abelian_invariants":[1]})"));
  CHECK(triv.verdict == "pass");
  CHECK(triv.body["witnesses"]["dim"] == 0);
}

TEST_CASE("mod2 commutator lifts scenario") {
  auto r = run_scenario(cfg("mod2-commutator-lifts"));
  CHECK(r.verdict == "pass");
  CHECK(r.body["witnesses"]["k"] == 1);
  CHECK(r.body["witnesses"]["folded_vertices"] == 4);
  CHECK(r.body["witnesses"]["folded_edges"] == 8);
}

TEST_CASE("abelian insufficiency scenario at reduced depth") {
  auto r = run_scenario(cfg("abelian-insufficiency", "", 0, 3));
  CHECK(r.verdict == "bounded-pass");
  CHECK(r.body["bounds"]["depth"] == 3);
  CHECK(r.body["witnesses"]["violations"].empty());

  // non-abelian group is a config error
  CHECK_THROWS_AS(
      run_scenario(cfg("abelian-insufficiency", R"gg({"perm_generators":["(1 2)","(1 2 3)"]})gg")),
      std::invalid_argument);
}

TEST_CASE("comm obstruction scenario") {
  auto s3 = run_scenario(cfg("comm-obstruction"));
  CHECK(s3.verdict == "bounded-pass");
  CHECK(s3.body["witnesses"]["saturation_dim"].get<int>() <= 1);
  CHECK(s3.body["witnesses"]["kernel_dim"] == 5);

  auto ab = run_scenario(cfg("comm-obstruction", R"({"abelian_invariants":[2,2]})"));
  CHECK(ab.verdict == "bounded-pass");
  CHECK(ab.body["witnesses"]["saturation_dim"] == 3);
  CHECK(ab.body["witnesses"]["kernel_dim"] == 3);
}

TEST_CASE("prim to prim scenario") {
  auto r = run_scenario(cfg("prim-to-prim", "", 0, 1));
  CHECK(r.verdict == "pass");
  CHECK(r.body["witnesses"]["failures"].empty());
}

TEST_CASE("run_all aggregates verdicts") {
  std::vector<ScenarioConfig> battery = {cfg("gaschuetz"), cfg("commutator-span")};
  std::ostringstream out, err;
  int code = run_all(battery, out, err);
  CHECK(code == 0);
  auto arr = nlohmann::json::parse(out.str());
  CHECK(arr.is_array());
  CHECK(arr.size() == 2);
  CHECK(err.str().find("gaschuetz: pass") != std::string::npos);
}

TEST_CASE("default battery is registered and well-formed") {
  auto battery = default_battery();
  CHECK(battery.size() >= 8);
  const auto& ids = registered_scenarios();
  for (const auto& c : battery)
    CHECK(std::find(ids.begin(), ids.end(), c.id) != ids.end());
}
