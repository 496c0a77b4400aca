#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

std::string binary() { return std::string(VOLKOV_CHECK_BIN); }

int run(const std::string& args) {
  const std::string cmd = binary() + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = "/tmp/" + name;
  std::ofstream out(path);
  REQUIRE(out.good());
  out << text;
  return path;
}

}  // namespace

TEST_CASE("passing suite exits zero") {
  CHECK(run("check --suite algebra") == 0);
}

TEST_CASE("a failed check exits one") {
  // An unattainable tolerance forces the rounding-level checks to fail.
  const std::string cmd = "VOLKOV_TOLERANCE_MATRIX=1e-30 " + binary() +
                          " check --suite algebra > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  CHECK(WEXITSTATUS(status) == 1);
}

TEST_CASE("bad input exits two") {
  const std::string bad_key = write_temp("volkov_cli_bad_key.cfg",
                                         "field.a0 = 1.0\nno_such_key = 3\n");
  CHECK(run("check --config " + bad_key) == 2);

  const std::string bad_shape =
      write_temp("volkov_cli_bad_shape.cfg", "field.shape = hexagonal\n");
  CHECK(run("check --config " + bad_shape) == 2);

  CHECK(run("check --config /nonexistent/volkov.cfg") == 2);
  CHECK(run("summarize") == 2);  // --in is required
}

TEST_CASE("unknown key diagnostics carry the line number") {
  const std::string cfg =
      write_temp("volkov_cli_lineno.cfg", "# comment\nfield.a0 = 1.0\nbogus = 1\n");
  const std::string cmd =
      binary() + " check --config " + cfg + " 2> /tmp/volkov_cli_lineno.err";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  CHECK(WEXITSTATUS(status) == 2);
  const std::string err = slurp("/tmp/volkov_cli_lineno.err");
  CHECK(err.find(":3") != std::string::npos);
  CHECK(err.find("bogus") != std::string::npos);
}

TEST_CASE("reports are deterministic for a fixed seed") {
  CHECK(run("check --suite algebra --suite spinors --seed 99 --out /tmp/volkov_cli_a.json") == 0);
  CHECK(run("check --suite algebra --suite spinors --seed 99 --out /tmp/volkov_cli_b.json") == 0);

  auto a = nlohmann::json::parse(slurp("/tmp/volkov_cli_a.json"));
  auto b = nlohmann::json::parse(slurp("/tmp/volkov_cli_b.json"));
  for (auto* doc : {&a, &b})
    for (auto& check : (*doc)["checks"]) check["wall_time_seconds"] = 0.0;
  CHECK(a.dump() == b.dump());
}

TEST_CASE("summarize prints a table from a saved report") {
  REQUIRE(run("check --suite spinors --out /tmp/volkov_cli_sum.json") == 0);
  const std::string cmd =
      binary() + " summarize --in /tmp/volkov_cli_sum.json > /tmp/volkov_cli_sum.txt 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  CHECK(WEXITSTATUS(status) == 0);
  const std::string table = slurp("/tmp/volkov_cli_sum.txt");
  CHECK(table.find("spinors") != std::string::npos);
  CHECK(table.find("PASS") != std::string::npos);
}

TEST_CASE("CSV sweep file is written next to the reports") {
  REQUIRE(run("check --suite appendix --csv /tmp") == 0);
  const std::string csv = slurp("/tmp/appendix_sweep.csv");
  CHECK(csv.rfind("n,kappa1,kappa2,sigma,value,target,error\n", 0) == 0);
}
