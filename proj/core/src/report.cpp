#include "volkov/report.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace volkov {

void sort_reports(std::vector<CheckReport>& reports) {
  std::sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) {
    return std::tie(a.suite, a.name) < std::tie(b.suite, b.name);
  });
}

std::string reports_to_json(const std::vector<CheckReport>& reports) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : reports) {
    checks.push_back({
        {"suite", r.suite},
        {"name", r.name},
        {"anchor", r.anchor},
        {"measured_error", r.measured_error},
        {"tolerance", r.tolerance},
        {"pass", r.pass},
        {"wall_time_seconds", r.wall_time_seconds},
        {"seed", r.seed},
    });
  }
  const nlohmann::json doc = {{"schema_version", 1}, {"checks", checks}};
  return doc.dump(2) + "\n";
}

std::vector<CheckReport> reports_from_json(const std::string& json_text) {
  const nlohmann::json doc = nlohmann::json::parse(json_text);
  if (!doc.contains("schema_version") || doc.at("schema_version").get<int>() != 1)
    throw std::runtime_error("unsupported report schema version");
  std::vector<CheckReport> reports;
  for (const auto& c : doc.at("checks")) {
    reports.push_back(CheckReport{
        c.at("suite").get<std::string>(),
        c.at("name").get<std::string>(),
        c.at("anchor").get<std::string>(),
        c.at("measured_error").get<double>(),
        c.at("tolerance").get<double>(),
        c.at("pass").get<bool>(),
        c.at("wall_time_seconds").get<double>(),
        c.at("seed").get<std::uint64_t>(),
    });
  }
  return reports;
}

void write_report_file(const std::string& path, const std::vector<CheckReport>& reports) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report file '" + path + "'");
  out << reports_to_json(reports);
}

std::vector<CheckReport> read_report_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open report file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return reports_from_json(buffer.str());
}

std::string summarize(std::vector<CheckReport> reports) {
  sort_reports(reports);
  std::size_t name_width = 4, anchor_width = 6;
  for (const auto& r : reports) {
    name_width = std::max(name_width, r.suite.size() + 1 + r.name.size());
    anchor_width = std::max(anchor_width, r.anchor.size());
  }
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(name_width)) << "name" << "  "
      << std::setw(static_cast<int>(anchor_width)) << "anchor" << "  "
      << std::setw(12) << "error" << "  " << std::setw(12) << "tolerance" << "  "
      << "status\n";
  for (const auto& r : reports) {
    out << std::left << std::setw(static_cast<int>(name_width)) << (r.suite + "." + r.name)
        << "  " << std::setw(static_cast<int>(anchor_width)) << r.anchor << "  "
        << std::setw(12) << std::scientific << std::setprecision(3) << r.measured_error
        << "  " << std::setw(12) << r.tolerance << "  " << (r.pass ? "PASS" : "FAIL")
        << "\n";
  }
  return out.str();
}

bool all_pass(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const CheckReport& r) { return r.pass; });
}

}  // namespace volkov
