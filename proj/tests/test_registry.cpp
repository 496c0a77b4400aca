#include "doctest.h"
#include "volkov/registry.hpp"

using namespace volkov;

TEST_CASE("suite selection controls which checks run") {
  RunConfig c;
  c.suites = {"algebra"};
  const auto reports = run_checks(c);
  CHECK(reports.size() == registered_check_count(c));
  for (const auto& r : reports) {
    CHECK(r.suite == "algebra");
    CHECK(!r.anchor.empty());
    CHECK(r.seed == c.seed);
    CHECK(r.pass == (r.measured_error <= r.tolerance));
  }
}

TEST_CASE("same seed reproduces identical measurements") {
  RunConfig c;
  c.suites = {"spinors"};
  c.seed = 1234;
  const auto a = run_checks(c);
  const auto b = run_checks(c);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].measured_error == b[i].measured_error);
  }
}

TEST_CASE("full registry count covers all suites") {
  RunConfig c;
  CHECK(registered_check_count(c) == 44);
  CHECK(run_checks(RunConfig{.suites = {"field"}}).size() == 5);
}

TEST_CASE("appendix sweep table has one row per grid point plus a header") {
  RunConfig c;
  const auto csv = appendix_sweep_csv(c);
  std::size_t rows = 0;
  for (char ch : csv)
    if (ch == '\n') ++rows;
  CHECK(rows == 13);
  CHECK(csv.rfind("n,kappa1,kappa2,sigma,value,target,error\n", 0) == 0);
}

TEST_CASE("invalid config is rejected before any check runs") {
  RunConfig c;
  c.field_shape = "not_a_shape";
  CHECK_THROWS_AS(run_checks(c), ConfigError);
}
