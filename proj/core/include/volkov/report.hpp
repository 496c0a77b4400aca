#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace volkov {

struct CheckReport {
  std::string suite;
  std::string name;
  std::string anchor;  // the identity or property being certified
  double measured_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double wall_time_seconds = 0.0;
  std::uint64_t seed = 0;
};

/// Stable report order: suite, then name.
void sort_reports(std::vector<CheckReport>& reports);

/// JSON document with a top-level schema_version of 1; deterministic for a
/// fixed config and seed except for the wall-time fields.
std::string reports_to_json(const std::vector<CheckReport>& reports);
std::vector<CheckReport> reports_from_json(const std::string& json_text);

void write_report_file(const std::string& path, const std::vector<CheckReport>& reports);
std::vector<CheckReport> read_report_file(const std::string& path);

/// One row per check (name, anchor, error, tolerance, PASS/FAIL), sorted by
/// suite then name, with a header row.
std::string summarize(std::vector<CheckReport> reports);

bool all_pass(const std::vector<CheckReport>& reports);

}  // namespace volkov
