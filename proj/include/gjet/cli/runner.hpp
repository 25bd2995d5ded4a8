#pragma once

#include "gjet/report.hpp"
#include "gjet/ym/fieldmodel.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gjet::cli {

// Parsed model file (or builtin alias): the 3.x field content as
// configuration.
struct ModelSpec {
  std::string name = "su2";
  int dimension = 4;
  ym::MetricMode metric = ym::MetricMode::formal;
  ym::LieAlgebraData group;
  Rat xi = Rat(1);
  Rat mass = Rat(1);
  bool fermion_sector = true;
  bool ghost_sector = true;
  bool validate = true;
};

struct RunConfig {
  std::string model = "su2";  // alias or path to a JSON model file
  std::vector<std::string> checks{"all"};
  std::uint64_t seed = 0;
  std::string report_format = "text";  // text | json
  std::optional<ym::MetricMode> metric_override;
  int jobs = 1;
  bool timings = false;
};

struct CheckOutcome {
  std::string name;
  std::string status;  // pass | fail | skip
  std::vector<CheckResult> items;
  double wall_ms = 0.0;
};

struct Report {
  ModelSpec model;
  std::uint64_t seed = 0;
  std::vector<CheckOutcome> checks;

  int passed() const;
  int failed() const;
  int skipped() const;
  std::string render_text(bool timings) const;
  std::string render_json(bool timings) const;
};

// Loads a model spec from a builtin alias (u1, su2, su3) or a JSON file;
// validates the Lie algebra data on load. Throws on parse or axiom failure.
ModelSpec load_model(const std::string& alias_or_path);

std::vector<std::string> check_names();

// Executes the selected checks. Unknown names are rejected before any work.
// Exit code contract: 0 all pass, 1 identity failure, 2 configuration error.
Report run(const RunConfig& config);

int exit_code(const Report& report);

}  // namespace gjet::cli
