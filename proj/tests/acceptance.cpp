// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and runtime budget, printing one PASS/FAIL line per criterion. Exits
// nonzero if any criterion fails.

#include "gjet/cli/runner.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

namespace {

struct Criterion {
  int number;
  std::string description;
  double budget_seconds;
  bool pass;
  double elapsed;
};

std::vector<Criterion> results;

template <class Fn>
void criterion(int number, const std::string& description, double budget_seconds, Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    ok = false;
    note = e.what();
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_budget = elapsed < budget_seconds;
  bool pass = ok && in_budget;
  std::printf("%s criterion %2d: %s (%.2fs of %.0fs budget)%s%s\n", pass ? "PASS" : "FAIL",
              number, description.c_str(), elapsed, budget_seconds,
              ok ? "" : " [identity failure]", note.empty() ? "" : (" " + note).c_str());
  std::fflush(stdout);
  results.push_back({number, description, budget_seconds, pass, elapsed});
}

bool run_checks(const std::string& model, const std::vector<std::string>& checks,
                std::uint64_t seed = 0) {
  gjet::cli::RunConfig config;
  config.model = model;
  config.checks = checks;
  config.seed = seed;
  gjet::cli::Report report = gjet::cli::run(config);
  if (report.failed() != 0) {
    for (const auto& c : report.checks)
      for (const auto& item : c.items)
        if (!item.pass)
          std::printf("    failed: %s / %s: %.200s\n", c.name.c_str(), item.name.c_str(),
                      item.witness.c_str());
  }
  return report.failed() == 0 && report.skipped() == 0;
}

}  // namespace

int main() {
  criterion(1, "Fock axioms: super-commutation relations on random mode sets", 5.0,
            [] { return run_checks("su2", {"fock_axioms"}); });

  criterion(2, "normal-ordering equals the dense-matrix composition oracle", 10.0,
            [] { return run_checks("su2", {"fock_normal_order"}); });

  criterion(3, "lattice equal-time rules and charge generation", 10.0,
            [] { return run_checks("su2", {"fock_lattice"}); });

  criterion(4, "d_H^2 = 0 and [d_H, delta[v]] = 0 on seeded random forms (m=2,4)", 30.0,
            [] { return run_checks("su2", {"dh_delta"}); });

  criterion(5, "splitting theorem for k=1 and k=2 on seeded random Lagrangians", 60.0,
            [] { return run_checks("su2", {"splitting"}); });

  criterion(6, "Euler-Lagrange finite-difference oracle on a 5x5 grid (< 1e-6)", 10.0,
            [] { return run_checks("su2", {"el_oracle"}); });

  const std::vector<std::string> brst_suite = {"nilpotency",    "theta_delta",
                                               "ghost_exactness", "brst_current",
                                               "fp_current",    "second_order"};
  criterion(7, "BRST suite for u(1) and su(2), m=4, exact", 300.0, [&] {
    return run_checks("u1", brst_suite) && run_checks("su2", brst_suite);
  });

  criterion(8, "su(3) nilpotency and ghost identities (no fermion sector)", 600.0,
            [&] { return run_checks("su3", brst_suite); });

  criterion(9, "Dirac projectors on >= 20 exact on-shell momenta", 5.0,
            [] { return run_checks("su2", {"dirac_projectors"}); });

  criterion(10, "byte-identical reports for identical (model, seed)", 120.0, [] {
    gjet::cli::RunConfig config;
    config.model = "u1";
    config.checks = {"all"};
    config.seed = 42;
    gjet::cli::Report a = gjet::cli::run(config);
    gjet::cli::Report b = gjet::cli::run(config);
    return a.render_text(false) == b.render_text(false) &&
           a.render_json(false) == b.render_json(false);
  });

  int failures = 0;
  for (const auto& c : results) failures += c.pass ? 0 : 1;
  std::printf("acceptance: %zu criteria, %d failed\n", results.size(), failures);
  return failures == 0 ? 0 : 1;
}
