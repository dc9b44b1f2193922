#include "voa/random.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "voa/types.hpp"

namespace voa {

double RandomSource::uniform_in(double lower, double upper) {
  if (!(lower < upper)) {
    throw ConfigError("uniform_in: lower bound " + std::to_string(lower) +
                      " must be below upper bound " + std::to_string(upper));
  }
  const double value = lower + uniform_unit() * (upper - lower);
  if (value >= upper) {
    return std::nextafter(upper, -std::numeric_limits<double>::infinity());
  }
  return value;
}

}  // namespace voa
