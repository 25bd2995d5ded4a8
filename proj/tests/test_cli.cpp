#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gjet/cli/runner.hpp"

#include <cstdio>
#include <fstream>

using namespace gjet;
using namespace gjet::cli;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/gjet_test_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

// su2 structure constants with a spurious antisymmetric c^1_{12} entry:
// antisymmetry survives, the Jacobi identity does not
const char* kBrokenSu2 = R"({
  "dimension": 4,
  "metric_mode": "formal",
  "group": {
    "dim": 3,
    "c": [
      [[0,0,0],[0,0,1],[0,-1,0]],
      [[0,0,-1],[0,0,1],[1,-1,0]],
      [[0,1,0],[-1,0,0],[0,0,0]]
    ],
    "l": [
      [[[0,0],[0,"-1/2"]],[[0,"-1/2"],[0,0]]],
      [[[0,0],["-1/2",0]],[["1/2",0],[0,0]]],
      [[[0,"-1/2"],[0,0]],[[0,0],[0,"1/2"]]]
    ]
  },
  "sectors_enabled": ["gauge", "ghost"]%EXTRA%
})";

std::string broken_su2(bool validate) {
  std::string s = kBrokenSu2;
  std::string extra = validate ? "" : ",\n  \"validate\": false";
  auto pos = s.find("%EXTRA%");
  s.replace(pos, 7, extra);
  return s;
}

}  // namespace

TEST_CASE("builtin aliases load and validate") {
  for (const char* name : {"u1", "su2", "su3"}) {
    ModelSpec spec = load_model(name);
    CHECK(spec.group.name == name);
    CHECK(spec.dimension == 4);
    CHECK(spec.ghost_sector);
  }
  // su3 has no rational fermion coupling
  CHECK(!load_model("su3").fermion_sector);
  CHECK(load_model("su2").fermion_sector);
}

TEST_CASE("model files load; missing sector key defaults to all sectors") {
  ModelSpec spec = load_model("models/su2.json");
  CHECK(spec.group.name == "su2");
  CHECK(spec.fermion_sector);
  CHECK(spec.ghost_sector);

  std::string path = write_temp("nosectors.json", R"({"group": "su2"})");
  ModelSpec defaulted = load_model(path);
  CHECK(defaulted.fermion_sector);
  CHECK(defaulted.ghost_sector);
  std::remove(path.c_str());
}

TEST_CASE("inline structure constants failing Jacobi are rejected with a witness") {
  std::string path = write_temp("broken.json", broken_su2(true));
  CHECK_THROWS_WITH_AS(load_model(path), doctest::Contains("jacobi"), std::invalid_argument);
  std::remove(path.c_str());
}

TEST_CASE("unknown checks are rejected before any work") {
  RunConfig config;
  config.model = "u1";
  config.checks = {"nilpotency", "no_such_check"};
  CHECK_THROWS_AS(run(config), std::invalid_argument);
}

TEST_CASE("a flipped structure constant propagates to S^2 and a nonzero exit") {
  std::string path = write_temp("broken_novalidate.json", broken_su2(false));
  RunConfig config;
  config.model = path;
  config.checks = {"nilpotency"};
  Report report = run(config);
  CHECK(report.failed() == 1);
  CHECK(exit_code(report) == 1);
  bool witness_seen = false;
  for (const auto& item : report.checks[0].items)
    if (!item.pass && !item.witness.empty()) witness_seen = true;
  CHECK(witness_seen);
  std::remove(path.c_str());
}

TEST_CASE("nilpotency on u1 passes trivially") {
  RunConfig config;
  config.model = "u1";
  config.checks = {"nilpotency"};
  Report report = run(config);
  CHECK(report.failed() == 0);
  CHECK(exit_code(report) == 0);
}

TEST_CASE("reports are byte-identical for identical model, seed and checks") {
  RunConfig config;
  config.model = "u1";
  config.checks = {"lie_validate", "ring_properties", "splitting", "nilpotency",
                   "ghost_exactness", "el_oracle"};
  config.seed = 7;
  Report a = run(config);
  Report b = run(config);
  CHECK(a.render_text(false) == b.render_text(false));
  CHECK(a.render_json(false) == b.render_json(false));
  // a different seed changes the corpus but not the verdicts
  config.seed = 8;
  Report c = run(config);
  CHECK(c.failed() == 0);
}

TEST_CASE("parallel execution keeps report order stable") {
  RunConfig config;
  config.model = "u1";
  config.checks = {"lie_validate", "ring_properties", "el_oracle", "curvature"};
  Report serial = run(config);
  config.jobs = 4;
  Report parallel = run(config);
  CHECK(serial.render_text(false) == parallel.render_text(false));
}

TEST_CASE("metric override is honored") {
  RunConfig config;
  config.model = "su2";
  config.checks = {"ghost_exactness"};
  config.metric_override = ym::MetricMode::constant;
  Report report = run(config);
  CHECK(report.failed() == 0);
  CHECK(report.model.metric == ym::MetricMode::constant);
}

TEST_CASE("ghost checks are skipped when the sector is disabled") {
  std::string path = write_temp("noghost.json", R"({
    "group": "su2", "sectors_enabled": ["gauge"]
  })");
  RunConfig config;
  config.model = path;
  config.checks = {"nilpotency", "curvature"};
  Report report = run(config);
  CHECK(report.checks[0].status == "skip");
  CHECK(report.checks[1].status == "pass");
  CHECK(exit_code(report) == 0);
  std::remove(path.c_str());
}
