#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "voa/harness/runner.hpp"

namespace voa::harness {

struct SummaryRow {
  std::string function;
  std::size_t dimension = 0;
  std::size_t n_seeds = 0;
  std::size_t n_failed = 0;
  double best_of_best = 0.0;
  double median_best = 0.0;
  double mean_best = 0.0;
  // Sample standard deviation; 0 for a single run.
  double stddev_best = 0.0;
  double worst_best = 0.0;
  std::optional<double> paper_reference_value;
};

/// Published minimization result for a cell, if the table reports one.
std::optional<double> paper_reference_value(const std::string& function,
                                            std::size_t dimension);

/// One row per (function, dimension) group in first-appearance order.
/// Failed runs are counted but excluded from the statistics; a group with
/// no successful run gets NaN statistics.
std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records);

}  // namespace voa::harness
