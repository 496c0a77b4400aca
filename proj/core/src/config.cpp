#include "volkov/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace volkov {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& value, const std::string& context) {
  std::size_t pos = 0;
  double out;
  try {
    out = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw ConfigError(context + ": expected a number, got '" + value + "'");
  }
  if (pos != value.size())
    throw ConfigError(context + ": trailing characters in number '" + value + "'");
  return out;
}

int parse_int(const std::string& value, const std::string& context) {
  const double d = parse_double(value, context);
  const int i = static_cast<int>(d);
  if (static_cast<double>(i) != d)
    throw ConfigError(context + ": expected an integer, got '" + value + "'");
  return i;
}

std::uint64_t parse_u64(const std::string& value, const std::string& context) {
  try {
    std::size_t pos = 0;
    const std::uint64_t out = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing");
    return out;
  } catch (const std::exception&) {
    throw ConfigError(context + ": expected an unsigned integer, got '" + value + "'");
  }
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> suites = {
      "algebra",        "spinors",      "field",    "volkov",
      "orthonormality", "completeness", "appendix",
  };
  return suites;
}

std::vector<std::string> RunConfig::selected_suites() const {
  return suites.empty() ? known_suites() : suites;
}

void RunConfig::validate() const {
  for (const auto& s : suites) {
    const auto& known = known_suites();
    if (std::find(known.begin(), known.end(), s) == known.end())
      throw ConfigError("unknown suite '" + s + "'");
  }
  static const std::vector<std::string> shapes = {"zero", "constant_plateau", "linear_sin2",
                                                  "circular_sin2"};
  if (std::find(shapes.begin(), shapes.end(), field_shape) == shapes.end())
    throw ConfigError("unknown field shape '" + field_shape + "'");
  if (field_shape != "zero") {
    if (field_omega <= 0.0) throw ConfigError("field.omega must be positive");
    if (field_cycles <= 0.0) throw ConfigError("field.cycles must be positive");
  }
  if (samples_matrix <= 0 || samples_points <= 0)
    throw ConfigError("sample counts must be positive");
  if (tol_matrix <= 0.0 || tol_identity <= 0.0 || tol_fd <= 0.0 || tol_smeared <= 0.0)
    throw ConfigError("tolerances must be positive");
  if (sigma <= 0.0) throw ConfigError("sigma must be positive");
}

void apply_key(RunConfig& config, const std::string& key, const std::string& value,
               const std::string& context) {
  if (key == "suites") config.suites = split_list(value);
  else if (key == "field.shape") config.field_shape = value;
  else if (key == "field.a0") config.field_a0 = parse_double(value, context);
  else if (key == "field.omega") config.field_omega = parse_double(value, context);
  else if (key == "field.cycles") config.field_cycles = parse_double(value, context);
  else if (key == "field.charge") config.field_charge = parse_double(value, context);
  else if (key == "samples.matrix") config.samples_matrix = parse_int(value, context);
  else if (key == "samples.points") config.samples_points = parse_int(value, context);
  else if (key == "tolerance.matrix") config.tol_matrix = parse_double(value, context);
  else if (key == "tolerance.identity") config.tol_identity = parse_double(value, context);
  else if (key == "tolerance.fd") config.tol_fd = parse_double(value, context);
  else if (key == "tolerance.smeared") config.tol_smeared = parse_double(value, context);
  else if (key == "sigma") config.sigma = parse_double(value, context);
  else if (key == "seed") config.seed = parse_u64(value, context);
  else throw ConfigError(context + ": unknown key '" + key + "'");
}

RunConfig parse_config_text(const std::string& text, const std::string& origin) {
  RunConfig config;
  std::stringstream ss(text);
  std::string line;
  int line_number = 0;
  while (std::getline(ss, line)) {
    ++line_number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string context = origin + ":" + std::to_string(line_number);
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(context + ": expected key=value, got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(context + ": empty key");
    apply_key(config, key, value, context);
  }
  return config;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str(), path);
}

std::vector<std::string> apply_env_overrides(RunConfig& config) {
  static const std::vector<std::string> keys = {
      "suites",          "field.shape",     "field.a0",           "field.omega",
      "field.cycles",    "field.charge",    "samples.matrix",     "samples.points",
      "tolerance.matrix", "tolerance.identity", "tolerance.fd",   "tolerance.smeared",
      "sigma",           "seed",
  };
  std::vector<std::string> applied;
  for (const auto& key : keys) {
    std::string var = "VOLKOV_";
    for (char c : key) var += (c == '.') ? '_' : static_cast<char>(std::toupper(c));
    if (const char* value = std::getenv(var.c_str())) {
      apply_key(config, key, value, "env " + var);
      applied.push_back(key);
    }
  }
  return applied;
}

}  // namespace volkov
