#include "voa/harness/targets.hpp"

#include <cmath>
#include <cstdio>

namespace voa::harness {

bool Target::accepts(double median) const noexcept {
  if (std::isnan(median)) return false;
  switch (kind) {
    case Kind::AtMost:
      return median <= value;
    case Kind::Near:
      return std::abs(median - value) <= tolerance;
  }
  return false;
}

std::string Target::describe() const {
  char buf[96];
  if (kind == Kind::AtMost) {
    std::snprintf(buf, sizeof buf, "median <= %g", value);
  } else {
    std::snprintf(buf, sizeof buf, "|median - (%g)| <= %g", value, tolerance);
  }
  return buf;
}

const std::vector<Target>& table_targets() {
  using K = Target::Kind;
  static const std::vector<Target> targets{
      {"booth", 2, K::AtMost, 1e-4, 0.0, 0.0},
      {"beale", 2, K::AtMost, 1e-4, 0.0, 0.0},
      {"goldstein_price", 2, K::Near, 3.0, 1e-3, 3.0},
      {"mccormick", 2, K::Near, -1.9133, 1e-3, -1.9133},
      {"three_hump_camel", 2, K::AtMost, 1e-4, 0.0, 0.0},
      {"sphere", 2, K::AtMost, 1e-4, 0.0, 0.0},
      {"sphere", 5, K::AtMost, 1e-4, 0.0, 0.0},
      {"sphere", 10, K::AtMost, 1e-4, 0.0, 0.0},
      {"sphere", 20, K::AtMost, 1e-4, 0.0, 0.0},
      {"sphere", 30, K::AtMost, 1e-4, 0.0, 0.0},
      {"rosenbrock", 2, K::AtMost, 1e-3, 0.0, 0.0},
      {"rosenbrock", 5, K::AtMost, 1e-3, 0.0, 0.0},
      {"rosenbrock", 10, K::AtMost, 1e-2, 0.0, 0.0002},
      {"rosenbrock", 20, K::AtMost, 5e-2, 0.0, 0.0027},
      {"rosenbrock", 30, K::AtMost, 5e-2, 0.0, 0.0023},
  };
  return targets;
}

std::vector<CheckOutcome> check(const std::vector<SummaryRow>& summaries) {
  std::vector<CheckOutcome> out;
  for (const auto& row : summaries) {
    for (const auto& t : table_targets()) {
      if (t.function == row.function && t.dimension == row.dimension) {
        out.push_back({t, row.median_best, t.accepts(row.median_best)});
      }
    }
  }
  return out;
}

}  // namespace voa::harness
