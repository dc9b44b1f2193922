#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace voa {

/// Raised for any invalid configuration, objective, or sampling range.
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Closed box constraint for one coordinate.
struct Interval {
  double lower = 0.0;
  double upper = 0.0;

  bool contains(double x) const noexcept { return lower <= x && x <= upper; }
  double clamp(double x) const noexcept {
    return x < lower ? lower : (x > upper ? upper : x);
  }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Admissible range for particle vorticity.
struct VorticityBounds {
  double min = -7.0;
  double max = 7.0;

  double clamp(double v) const noexcept {
    return v < min ? min : (v > max ? max : v);
  }
  bool contains(double v) const noexcept { return min <= v && v <= max; }
};

enum class Status : std::uint8_t { Normal, Vortex };

struct Particle {
  std::vector<double> position;
  double vorticity = 0.0;
  double fitness = 0.0;
  Status status = Status::Normal;

  bool is_vortex() const noexcept { return status == Status::Vortex; }
};

struct VoaConfig {
  std::size_t n_particles = 50;
  std::size_t max_iterations = 5000;
  double initial_vorticity = 0.50;
  double max_vorticity = 7.0;
  double min_vorticity = -7.0;
  std::size_t elimination_threshold = 50;
  std::uint64_t seed = 1;
  double eq2_epsilon = 1e-9;

  // Position update draws one value per coordinate. When false a single
  // draw scales the whole displacement vector, which stalls on Sphere for
  // d >= 10 under the default settings.
  bool per_coordinate_draws = true;
  // Stop as soon as the best-so-far reaches this value.
  std::optional<double> target_fitness;

  VorticityBounds vorticity_bounds() const noexcept {
    return {min_vorticity, max_vorticity};
  }

  /// Throws ConfigError describing the first violated constraint.
  void validate() const;
};

using Evaluator = std::function<double(std::span<const double>)>;

/// A box-constrained minimization problem.
struct Objective {
  std::string name;
  std::size_t dimension = 0;
  std::vector<Interval> bounds;
  Evaluator evaluate;
  std::optional<double> known_minimum_value;
  std::optional<std::vector<double>> known_minimizer;

  double operator()(std::span<const double> x) const { return evaluate(x); }

  /// Checks dimension/bounds consistency and that a known minimizer, if
  /// present, is in bounds. Throws ConfigError.
  void validate() const;
};

/// Population plus the best-so-far record of one run.
struct SwarmState {
  std::vector<Particle> particles;
  std::vector<double> best_position;
  double best_fitness = 0.0;
  double best_vorticity = 0.0;
  // Index of the particle that produced the current record. That particle is
  // exempt from decay, movement and elimination, so it still sits at
  // best_position.
  std::size_t best_index = 0;
  std::size_t iteration = 0;
  std::size_t evaluations = 0;
  std::size_t non_finite_evaluations = 0;

  const Particle& best_particle() const { return particles.at(best_index); }
};

}  // namespace voa
