#pragma once

#include <string>
#include <vector>

#include <CLI11.hpp>

#include "voa/harness/plan.hpp"

namespace voa::cli {

/// Registers the experiment flags (and --config) on `app`, writing into
/// `options`. Config files hold `key = value` lines keyed by the long flag
/// name without its leading dashes, e.g. `init-vorticity = 0.5`.
void add_plan_options(CLI::App& app, harness::PlanOptions& options);

/// Parses `args` (no program name, no subcommand) into a validated plan.
/// Precedence: command line > config file > built-in defaults.
/// Throws ConfigError for anything the parser or validation rejects.
harness::ExperimentPlan parse_plan(const std::vector<std::string>& args);

}  // namespace voa::cli
