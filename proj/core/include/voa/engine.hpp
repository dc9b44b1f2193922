#pragma once

// Vortex Optimization Algorithm: a swarm minimizer in which every particle
// carries a scalar vorticity that scales its pull toward the best-so-far
// position. Particles at or below the mean fitness are "vortex" particles;
// the rest are "normal" and are periodically replaced by fresh random ones.
//
// One iteration runs, in order:
//   1. mark_vortices
//   2. global pull on every particle's vorticity
//   3. vorticity decay on every vortex particle except the record holder
//   4. position update on every particle except the record holder
//   5. refresh_fitness_and_best
//   6. eliminate_and_respawn
//
// Random draws are consumed in that order, particle index ascending within
// each step (coordinate ascending where a step draws per coordinate).
// Initialization draws every coordinate of particle 0, then particle 1, ...,
// then one draw for the kick on the initial best particle.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "voa/random.hpp"
#include "voa/types.hpp"

namespace voa {

struct IterationTrace {
  std::size_t iteration = 0;
  double best_fitness_so_far = 0.0;
  double mean_fitness = 0.0;
  std::size_t vortex_count = 0;
  bool eliminations_triggered = false;
  // Objective values that came back NaN or infinite during this iteration.
  std::size_t non_finite_evaluations = 0;
};

struct RunReport {
  std::vector<double> best_position;
  double best_fitness = 0.0;
  std::vector<IterationTrace> trace;
  std::size_t evaluations = 0;
  std::size_t iterations_executed = 0;
  double wall_time_ms = 0.0;
  std::uint64_t seed = 0;
  VoaConfig config;
};

struct EliminationOutcome {
  bool triggered = false;
  std::size_t replaced = 0;
};

// -- Update rules -----------------------------------------------------------

/// Kick applied once to the initial best particle: v + r*v, clamped.
double eq1_best_vorticity_kick(double v_current, double r,
                               VorticityBounds limits = {});

/// Pull of a particle's vorticity toward the record vorticity:
/// v + r * (v_best / v), clamped. |v| below epsilon is replaced by
/// epsilon*sign(v) (sign(0) = +1) before dividing.
double eq2_global_pull(double v_i, double v_global_best, double r,
                       double epsilon, VorticityBounds limits = {});

/// Decay of a vortex particle's vorticity: r * v.
double eq3_vortex_decay(double v_i, double r);

/// pos + r * v * (best - pos), each coordinate clamped into its interval.
/// `draws` holds either one value shared by every coordinate or one value
/// per coordinate. Throws std::invalid_argument on any size mismatch.
std::vector<double> eq4_position_update(std::span<const double> position,
                                        double v_i,
                                        std::span<const double> best_position,
                                        std::span<const double> draws,
                                        std::span<const Interval> bounds);

std::vector<double> eq4_position_update(std::span<const double> position,
                                        double v_i,
                                        std::span<const double> best_position,
                                        double r,
                                        std::span<const Interval> bounds);

// -- Swarm steps ------------------------------------------------------------

/// Non-finite values compare as +infinity.
double comparable_fitness(double f) noexcept;

/// Arithmetic mean of the finite fitnesses (+inf if none are finite).
double mean_fitness(const SwarmState& state) noexcept;

/// Random placement, evaluation, and the kick on the initial best particle,
/// which becomes the record holder and the only vortex particle.
SwarmState initialize_swarm(const VoaConfig& config, const Objective& objective,
                            RandomSource& rng);

/// Vortex iff fitness <= mean fitness, or the particle holds the record.
void mark_vortices(SwarmState& state);

/// Global pull on every particle, record holder included.
void apply_global_pull(SwarmState& state, const VoaConfig& config,
                       RandomSource& rng);

/// Decay on every vortex particle except the record holder.
void apply_vortex_decay(SwarmState& state, RandomSource& rng);

/// Position update on every particle except the record holder.
void apply_position_update(SwarmState& state, const VoaConfig& config,
                           const Objective& objective, RandomSource& rng);

/// Re-evaluates every particle, marks the iteration best as vortex, and
/// replaces the record only on strict improvement. Returns the number of
/// non-finite evaluations.
std::size_t refresh_fitness_and_best(SwarmState& state,
                                     const Objective& objective);

/// When the number of normal particles is at most the elimination
/// threshold, every normal particle is replaced by a fresh random one
/// (normal, initial vorticity, evaluated). The best fresh particle takes the
/// record, and becomes vortex, if it strictly improves on it.
EliminationOutcome eliminate_and_respawn(SwarmState& state,
                                         const VoaConfig& config,
                                         const Objective& objective,
                                         RandomSource& rng);

/// Runs one full iteration and returns its trace row.
IterationTrace step(SwarmState& state, const VoaConfig& config,
                    const Objective& objective, RandomSource& rng);

IterationTrace snapshot(const SwarmState& state, bool eliminated = false,
                        std::size_t non_finite = 0);

/// Complete run. Trace row 0 describes the initialized swarm.
RunReport run(const VoaConfig& config, const Objective& objective);

}  // namespace voa
