// End-to-end acceptance run: one line per criterion, exit 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "volkov/registry.hpp"

namespace {

using volkov::CheckReport;
using volkov::RunConfig;

struct TimedRun {
  std::vector<CheckReport> reports;
  double seconds = 0.0;
};

TimedRun timed_run(RunConfig config, std::vector<std::string> suites) {
  config.suites = std::move(suites);
  const auto start = std::chrono::steady_clock::now();
  TimedRun out;
  out.reports = volkov::run_checks(config);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

const CheckReport& find(const std::vector<CheckReport>& reports, const std::string& name) {
  for (const auto& r : reports)
    if (r.name == name) return r;
  throw std::runtime_error("missing check report: " + name);
}

bool within(const std::vector<CheckReport>& reports, const std::string& name, double tol) {
  return find(reports, name).measured_error <= tol;
}

int g_failures = 0;

void report(int n, const std::string& label, bool pass) {
  std::printf("criterion %d (%s): %s\n", n, label.c_str(), pass ? "PASS" : "FAIL");
  if (!pass) ++g_failures;
}

int spawn(const std::string& args) {
  const std::string cmd = std::string(VOLKOV_CHECK_BIN) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return status == -1 ? -1 : WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

bool reports_match_modulo_wall_time(const std::string& path_a, const std::string& path_b) {
  auto a = nlohmann::json::parse(slurp(path_a));
  auto b = nlohmann::json::parse(slurp(path_b));
  for (auto* doc : {&a, &b})
    for (auto& check : (*doc)["checks"]) check["wall_time_seconds"] = 0.0;
  return a.dump() == b.dump();
}

void criterion_gamma_algebra(const RunConfig& base) {
  const auto run = timed_run(base, {"algebra"});
  bool ok = run.seconds < 1.0;
  ok = ok && find(run.reports, "anticommutators").measured_error == 0.0;
  ok = ok && within(run.reports, "slash_square", 1e-13);
  ok = ok && within(run.reports, "nilpotent_factor", 1e-13);
  report(1, "gamma matrix algebra", ok);
}

void criterion_free_spinors(const RunConfig& base) {
  const auto run = timed_run(base, {"spinors"});
  bool ok = run.seconds < 1.0;
  ok = ok && within(run.reports, "orthonormality", 1e-13);
  ok = ok && within(run.reports, "completeness", 1e-13);
  report(2, "free spinor orthonormality and completeness", ok);
}

void criterion_state_residuals(const std::vector<TimedRun>& runs) {
  double seconds = 0.0;
  bool ok = true;
  for (const auto& run : runs) {
    seconds += run.seconds;
    ok = ok && within(run.reports, "zero_field_reduction", 1e-12);
    ok = ok && within(run.reports, "first_order_residual", 1e-4);
    ok = ok && within(run.reports, "squared_residual", 1e-3);
    ok = ok && find(run.reports, "residual_h_convergence").pass;
  }
  ok = ok && seconds < 30.0;
  report(3, "dressed state solves the field equation, both pulse shapes", ok);
}

void criterion_phase_ode(const std::vector<TimedRun>& runs) {
  bool ok = true;
  for (const auto& run : runs) {
    ok = ok && run.seconds < 5.0;
    ok = ok && within(run.reports, "f_ode_residual", 1e-6);
  }
  report(4, "light-cone phase satisfies its first-order equation", ok);
}

void criterion_orthonormality_identities(const TimedRun& run) {
  bool ok = run.seconds < 10.0;
  ok = ok && within(run.reports, "bilinears", 1e-12);
  ok = ok && within(run.reports, "dressed_product", 1e-12);
  ok = ok && within(run.reports, "g_diagonal", 1e-12);
  ok = ok && within(run.reports, "jacobian_fd", 1e-8);
  report(5, "overlap bilinear identities and coincidence Jacobian", ok);
}

void criterion_smeared_orthonormality(const TimedRun& run) {
  bool ok = run.seconds < 60.0;
  ok = ok && within(run.reports, "smeared_zero_field", 0.005);
  ok = ok && within(run.reports, "smeared_pulse", 0.01);
  report(6, "smeared orthonormality integral matches the normalized target", ok);
}

void criterion_completeness(const RunConfig& base) {
  const auto run = timed_run(base, {"completeness"});
  bool ok = run.seconds < 10.0;
  ok = ok && within(run.reports, "kernel_forms", 1e-12);
  ok = ok && within(run.reports, "inverse_power_recovery", 1e-10);
  ok = ok && within(run.reports, "parity", 1e-12);
  ok = ok && within(run.reports, "delta_assembly_matrix", 1e-12);
  ok = ok && within(run.reports, "delta_assembly_jacobians", 1e-8);
  report(7, "completeness kernel decomposition and delta assembly", ok);
}

void criterion_oscillatory_integrals(const RunConfig& base) {
  const auto run = timed_run(base, {"appendix"});
  bool ok = run.seconds < 120.0;
  ok = ok && within(run.reports, "i0_fourier", 0.001);
  ok = ok && within(run.reports, "i2_duality", 0.001);
  ok = ok && within(run.reports, "i0_offaxis", 0.02);
  ok = ok && within(run.reports, "i2_offaxis", 0.02);
  ok = ok && within(run.reports, "i1_symmetric", 0.02);
  ok = ok && within(run.reports, "i1_offaxis", 0.02);
  ok = ok && within(run.reports, "i1_far_center", 0.02);
  ok = ok && within(run.reports, "i0_far_center", 0.02);
  ok = ok && find(run.reports, "refinement_shift").pass;
  report(8, "smeared oscillatory integrals carry the expected delta weights", ok);
}

void criterion_cli_determinism() {
  bool ok = spawn("check --suite algebra --suite spinors --seed 7 "
                  "--out /tmp/volkov_acc_a.json") == 0;
  ok = ok && spawn("check --suite algebra --suite spinors --seed 7 "
                   "--out /tmp/volkov_acc_b.json") == 0;
  ok = ok && reports_match_modulo_wall_time("/tmp/volkov_acc_a.json", "/tmp/volkov_acc_b.json");
  // Exit code contract: 0 pass, 1 check failure, 2 bad input.
  {
    std::ofstream bad("/tmp/volkov_acc_bad.cfg");
    bad << "no_such_key = 1\n";
  }
  ok = ok && spawn("check --config /tmp/volkov_acc_bad.cfg") == 2;
  const std::string forced_fail = "VOLKOV_TOLERANCE_MATRIX=1e-30 " +
                                  std::string(VOLKOV_CHECK_BIN) +
                                  " check --suite algebra > /dev/null 2>&1";
  const int status = std::system(forced_fail.c_str());
  ok = ok && status != -1 && WEXITSTATUS(status) == 1;
  report(9, "deterministic seeded reports and exit code contract", ok);
}

}  // namespace

int main() {
  try {
    const RunConfig base;

    criterion_gamma_algebra(base);
    criterion_free_spinors(base);

    RunConfig circular = base;
    circular.field_shape = "circular_sin2";
    const std::vector<TimedRun> volkov_runs = {timed_run(base, {"volkov"}),
                                               timed_run(circular, {"volkov"})};
    criterion_state_residuals(volkov_runs);
    criterion_phase_ode(volkov_runs);

    const auto ortho = timed_run(base, {"orthonormality"});
    criterion_orthonormality_identities(ortho);
    criterion_smeared_orthonormality(ortho);

    criterion_completeness(base);
    criterion_oscillatory_integrals(base);
    criterion_cli_determinism();
  } catch (const std::exception& e) {
    std::cerr << "acceptance run aborted: " << e.what() << "\n";
    return 1;
  }

  if (g_failures != 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all 9 criteria passed\n");
  return 0;
}
