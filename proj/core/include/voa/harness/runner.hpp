#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "voa/engine.hpp"
#include "voa/harness/plan.hpp"

namespace voa::harness {

struct RunRecord {
  std::string function;
  std::size_t dimension = 0;
  std::uint64_t seed = 0;
  RunReport report;
  // Set when the run threw; `report` is then default-constructed.
  std::optional<std::string> error;

  bool ok() const noexcept { return !error.has_value(); }
};

/// Runs every (cell, seed) pair, concurrently when plan.threads != 1.
/// Results are ordered by cell order, then seed order, independent of
/// scheduling. A failing run yields a record with `error` set and does not
/// stop its siblings. Traces are dropped unless plan.trace_dir is set or
/// keep_traces is true.
std::vector<RunRecord> execute_plan(const ExperimentPlan& plan,
                                    bool keep_traces = false);

}  // namespace voa::harness
