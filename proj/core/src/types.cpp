#include "voa/types.hpp"

#include <cmath>

namespace voa {

void VoaConfig::validate() const {
  if (n_particles < 2) {
    throw ConfigError("n_particles must be at least 2, got " +
                      std::to_string(n_particles));
  }
  if (!std::isfinite(min_vorticity) || !std::isfinite(max_vorticity) ||
      !(min_vorticity < 0.0 && 0.0 < max_vorticity)) {
    throw ConfigError("vorticity limits must satisfy min < 0 < max, got [" +
                      std::to_string(min_vorticity) + ", " +
                      std::to_string(max_vorticity) + "]");
  }
  if (!std::isfinite(initial_vorticity) || initial_vorticity < min_vorticity ||
      initial_vorticity > max_vorticity) {
    throw ConfigError("initial_vorticity " + std::to_string(initial_vorticity) +
                      " lies outside the vorticity limits");
  }
  if (elimination_threshold > n_particles) {
    throw ConfigError("elimination_threshold " +
                      std::to_string(elimination_threshold) +
                      " exceeds n_particles " + std::to_string(n_particles));
  }
  if (!(eq2_epsilon > 0.0) || !std::isfinite(eq2_epsilon)) {
    throw ConfigError("eq2_epsilon must be a positive finite number");
  }
  if (target_fitness && std::isnan(*target_fitness)) {
    throw ConfigError("target_fitness must not be NaN");
  }
}

void Objective::validate() const {
  if (dimension == 0) {
    throw ConfigError("objective '" + name + "' has dimension 0");
  }
  if (bounds.size() != dimension) {
    throw ConfigError("objective '" + name + "' has " +
                      std::to_string(bounds.size()) + " bounds for dimension " +
                      std::to_string(dimension));
  }
  for (std::size_t k = 0; k < bounds.size(); ++k) {
    const auto& b = bounds[k];
    if (!std::isfinite(b.lower) || !std::isfinite(b.upper) ||
        !(b.lower < b.upper)) {
      throw ConfigError("objective '" + name + "' has an empty or non-finite "
                        "domain in coordinate " + std::to_string(k));
    }
  }
  if (!evaluate) {
    throw ConfigError("objective '" + name + "' has no evaluation function");
  }
  if (known_minimizer) {
    if (known_minimizer->size() != dimension) {
      throw ConfigError("objective '" + name +
                        "' known minimizer has the wrong dimension");
    }
    for (std::size_t k = 0; k < dimension; ++k) {
      if (!bounds[k].contains((*known_minimizer)[k])) {
        throw ConfigError("objective '" + name +
                          "' known minimizer lies outside its bounds");
      }
    }
  }
}

}  // namespace voa
