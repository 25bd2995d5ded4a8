// Batch runner for the graded variational / Fock identity suites.
//
//   gjet --model su2 --check all --seed 0 --report text
//
// Exit codes: 0 all checks pass, 1 some identity failed, 2 configuration or
// infrastructure error.

#include "gjet/cli/runner.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"exact identity checker for graded jet-bundle variational calculus"};

  gjet::cli::RunConfig config;
  std::string metric;
  bool list_checks = false;
  app.add_option("--model", config.model, "model file path or builtin alias (u1, su2, su3)")
      ->capture_default_str();
  app.add_option("--check", config.checks,
                 "check names (repeatable), or 'all'")
      ->capture_default_str();
  app.add_option("--seed", config.seed, "seed for the randomized property corpora")
      ->capture_default_str();
  app.add_option("--report", config.report_format, "report format: text | json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--metric", metric, "override metric mode: constant | formal")
      ->check(CLI::IsMember({"", "constant", "formal"}));
  app.add_option("--jobs", config.jobs, "number of worker threads")->capture_default_str();
  app.add_flag("--timings", config.timings, "include wall times in the report");
  app.add_flag("--list-checks", list_checks, "list available check names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (list_checks) {
    for (const auto& name : gjet::cli::check_names()) std::cout << name << "\n";
    return 0;
  }

  if (metric == "constant") config.metric_override = gjet::ym::MetricMode::constant;
  if (metric == "formal") config.metric_override = gjet::ym::MetricMode::formal;

  try {
    gjet::cli::Report report = gjet::cli::run(config);
    if (config.report_format == "json")
      std::cout << report.render_json(config.timings);
    else
      std::cout << report.render_text(config.timings);
    return gjet::cli::exit_code(report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
