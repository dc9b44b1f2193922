#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "voa/harness/summary.hpp"

namespace voa::harness {

/// Acceptance target for the median best of one cell.
struct Target {
  enum class Kind { AtMost, Near };

  std::string function;
  std::size_t dimension = 0;
  Kind kind = Kind::AtMost;
  // Threshold for AtMost, centre for Near.
  double value = 0.0;
  // Absolute tolerance around `value` for Near; unused for AtMost.
  double tolerance = 0.0;
  double paper_value = 0.0;

  bool accepts(double median) const noexcept;
  std::string describe() const;
};

const std::vector<Target>& table_targets();

struct CheckOutcome {
  Target target;
  double median = 0.0;
  bool passed = false;
};

/// Compares every summary row that has a target. Rows without one are
/// skipped.
std::vector<CheckOutcome> check(const std::vector<SummaryRow>& summaries);

}  // namespace voa::harness
