#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "volkov/config.hpp"
#include "volkov/registry.hpp"
#include "volkov/report.hpp"

namespace {

int run_check(const std::string& config_path, const std::vector<std::string>& suites,
              bool seed_set, std::uint64_t seed, const std::string& out_path,
              const std::string& csv_dir) {
  volkov::RunConfig config =
      config_path.empty() ? volkov::RunConfig{} : volkov::parse_config_file(config_path);
  volkov::apply_env_overrides(config);
  if (!suites.empty()) config.suites = suites;
  if (seed_set) config.seed = seed;
  config.validate();

  const auto reports = volkov::run_checks(config);
  if (!out_path.empty()) volkov::write_report_file(out_path, reports);
  if (!csv_dir.empty()) {
    const std::string path = csv_dir + "/appendix_sweep.csv";
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write CSV file '" + path + "'");
    out << volkov::appendix_sweep_csv(config);
  }
  std::cout << volkov::summarize(reports);
  return volkov::all_pass(reports) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification checks for Dirac plane-wave (Volkov) states"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "run check suites and write reports");
  std::string config_path, out_path, csv_dir;
  std::vector<std::string> suites;
  std::uint64_t seed = 0;
  check->add_option("--config", config_path, "key=value config file");
  auto* suite_opt =
      check->add_option("--suite", suites, "suite to run (repeatable; default all)");
  suite_opt->take_all();
  auto* seed_opt = check->add_option("--seed", seed, "random seed override");
  check->add_option("--out", out_path, "JSON report output path");
  check->add_option("--csv", csv_dir, "directory for CSV sweep tables");

  auto* summarize = app.add_subcommand("summarize", "print a table from a JSON report");
  std::string in_path;
  summarize->add_option("--in", in_path, "JSON report input path")->required();

  try {
    app.parse(argc, argv);
    if (check->parsed())
      return run_check(config_path, suites, seed_opt->count() > 0, seed, out_path, csv_dir);
    std::cout << volkov::summarize(volkov::read_report_file(in_path));
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
