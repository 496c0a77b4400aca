#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace volkov {

/// Raised for malformed config input; message carries the file line number
/// when one is known.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string>& known_suites();

struct RunConfig {
  std::vector<std::string> suites;  // empty means all

  std::string field_shape = "linear_sin2";
  double field_a0 = 1.0;
  double field_omega = 1.0;
  double field_cycles = 4.0;
  double field_charge = -1.0;

  int samples_matrix = 1000;  // algebra and spinor identity samples
  int samples_points = 100;   // spacetime sample points for residuals

  double tol_matrix = 1e-13;   // exact matrix identities
  double tol_identity = 1e-12; // closed-form identities through quadrature
  double tol_fd = 1e-8;        // finite-difference assisted checks
  double tol_smeared = 0.02;   // distributional (smeared) targets

  double sigma = 0.05;  // smearing width for the distributional suites

  std::uint64_t seed = 20260826;

  std::vector<std::string> selected_suites() const;  // resolves the empty case
  void validate() const;                             // throws ConfigError
};

/// Flat key=value text, '#' comments, dotted section prefixes
/// (field.a0=1.0). Unknown keys are rejected with their line number.
RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text, const std::string& origin);

/// Applies VOLKOV_* environment variables on top of `config`; the variable
/// name is the config key upper-cased with '.' replaced by '_'
/// (VOLKOV_FIELD_A0 sets field.a0). Returns the keys that were applied.
std::vector<std::string> apply_env_overrides(RunConfig& config);

/// Assigns one key; shared by the file parser, env overrides, and CLI flags.
void apply_key(RunConfig& config, const std::string& key, const std::string& value,
               const std::string& context);

}  // namespace volkov
