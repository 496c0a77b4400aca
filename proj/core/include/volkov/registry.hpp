#pragma once

#include <string>
#include <vector>

#include "volkov/config.hpp"
#include "volkov/report.hpp"

namespace volkov {

/// Runs every check registered for the selected suites, deterministically
/// under the config seed, and returns the reports sorted by suite then name.
std::vector<CheckReport> run_checks(const RunConfig& config);

/// Total number of registered checks across all suites for a given config
/// (fixed registry; used to validate full-run report counts).
std::size_t registered_check_count(const RunConfig& config);

/// CSV sweep over the smeared distributional integrals:
/// n,kappa1,kappa2,sigma,value,target,error
std::string appendix_sweep_csv(const RunConfig& config);

}  // namespace volkov
