#include "voa/engine.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

namespace voa {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double evaluate_counted(SwarmState& state, const Objective& objective,
                        std::span<const double> x, std::size_t& non_finite) {
  const double f = objective(x);
  ++state.evaluations;
  if (!std::isfinite(f)) {
    ++state.non_finite_evaluations;
    ++non_finite;
  }
  return f;
}

Particle spawn_particle(const VoaConfig& config, const Objective& objective,
                        RandomSource& rng) {
  Particle p;
  p.position.reserve(objective.dimension);
  for (const auto& b : objective.bounds) {
    p.position.push_back(rng.uniform_in(b.lower, b.upper));
  }
  p.vorticity = config.initial_vorticity;
  p.status = Status::Normal;
  return p;
}

std::size_t argmin_fitness(const SwarmState& state) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < state.particles.size(); ++i) {
    if (comparable_fitness(state.particles[i].fitness) <
        comparable_fitness(state.particles[best].fitness)) {
      best = i;
    }
  }
  return best;
}

}  // namespace

double eq1_best_vorticity_kick(double v_current, double r,
                               VorticityBounds limits) {
  return limits.clamp(v_current + r * v_current);
}

double eq2_global_pull(double v_i, double v_global_best, double r,
                       double epsilon, VorticityBounds limits) {
  double divisor = v_i;
  if (std::abs(v_i) < epsilon) {
    divisor = v_i < 0.0 ? -epsilon : epsilon;
  }
  return limits.clamp(v_i + r * (v_global_best / divisor));
}

double eq3_vortex_decay(double v_i, double r) { return r * v_i; }

std::vector<double> eq4_position_update(std::span<const double> position,
                                        double v_i,
                                        std::span<const double> best_position,
                                        std::span<const double> draws,
                                        std::span<const Interval> bounds) {
  const std::size_t d = position.size();
  if (best_position.size() != d || bounds.size() != d) {
    throw std::invalid_argument("eq4_position_update: dimension mismatch");
  }
  if (draws.size() != 1 && draws.size() != d) {
    throw std::invalid_argument(
        "eq4_position_update: need one draw or one draw per coordinate");
  }
  std::vector<double> next(d);
  for (std::size_t k = 0; k < d; ++k) {
    const double r = draws.size() == 1 ? draws[0] : draws[k];
    next[k] = bounds[k].clamp(position[k] +
                              r * (v_i * (best_position[k] - position[k])));
  }
  return next;
}

std::vector<double> eq4_position_update(std::span<const double> position,
                                        double v_i,
                                        std::span<const double> best_position,
                                        double r,
                                        std::span<const Interval> bounds) {
  return eq4_position_update(position, v_i, best_position,
                             std::span<const double>(&r, 1), bounds);
}

double comparable_fitness(double f) noexcept {
  return std::isfinite(f) ? f : kInf;
}

double mean_fitness(const SwarmState& state) noexcept {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& p : state.particles) {
    if (std::isfinite(p.fitness)) {
      sum += p.fitness;
      ++n;
    }
  }
  return n == 0 ? kInf : sum / static_cast<double>(n);
}

SwarmState initialize_swarm(const VoaConfig& config, const Objective& objective,
                            RandomSource& rng) {
  config.validate();
  objective.validate();

  SwarmState state;
  state.particles.reserve(config.n_particles);
  std::size_t non_finite = 0;
  for (std::size_t i = 0; i < config.n_particles; ++i) {
    state.particles.push_back(spawn_particle(config, objective, rng));
    auto& p = state.particles.back();
    p.fitness = evaluate_counted(state, objective, p.position, non_finite);
  }

  const std::size_t best = argmin_fitness(state);
  auto& holder = state.particles[best];
  holder.vorticity = eq1_best_vorticity_kick(
      holder.vorticity, rng.uniform_unit(), config.vorticity_bounds());
  holder.status = Status::Vortex;

  state.best_index = best;
  state.best_position = holder.position;
  state.best_fitness = holder.fitness;
  state.best_vorticity = holder.vorticity;
  state.iteration = 0;
  return state;
}

void mark_vortices(SwarmState& state) {
  const double mean = mean_fitness(state);
  for (std::size_t i = 0; i < state.particles.size(); ++i) {
    auto& p = state.particles[i];
    const bool below = std::isfinite(p.fitness) && p.fitness <= mean;
    p.status = (below || i == state.best_index) ? Status::Vortex
                                                : Status::Normal;
  }
}

void apply_global_pull(SwarmState& state, const VoaConfig& config,
                       RandomSource& rng) {
  const auto limits = config.vorticity_bounds();
  for (auto& p : state.particles) {
    p.vorticity = eq2_global_pull(p.vorticity, state.best_vorticity,
                                  rng.uniform_unit(), config.eq2_epsilon,
                                  limits);
  }
}

void apply_vortex_decay(SwarmState& state, RandomSource& rng) {
  for (std::size_t i = 0; i < state.particles.size(); ++i) {
    auto& p = state.particles[i];
    if (i == state.best_index || !p.is_vortex()) continue;
    p.vorticity = eq3_vortex_decay(p.vorticity, rng.uniform_unit());
  }
}

void apply_position_update(SwarmState& state, const VoaConfig& config,
                           const Objective& objective, RandomSource& rng) {
  const std::size_t d = objective.dimension;
  std::vector<double> draws(config.per_coordinate_draws ? d : 1);
  for (std::size_t i = 0; i < state.particles.size(); ++i) {
    if (i == state.best_index) continue;
    auto& p = state.particles[i];
    for (auto& r : draws) r = rng.uniform_unit();
    p.position = eq4_position_update(p.position, p.vorticity,
                                     state.best_position, draws,
                                     objective.bounds);
  }
}

std::size_t refresh_fitness_and_best(SwarmState& state,
                                     const Objective& objective) {
  std::size_t non_finite = 0;
  for (auto& p : state.particles) {
    p.fitness = evaluate_counted(state, objective, p.position, non_finite);
  }

  const std::size_t best = argmin_fitness(state);
  auto& candidate = state.particles[best];
  candidate.status = Status::Vortex;
  if (comparable_fitness(candidate.fitness) <
      comparable_fitness(state.best_fitness)) {
    state.best_index = best;
    state.best_position = candidate.position;
    state.best_fitness = candidate.fitness;
    state.best_vorticity = candidate.vorticity;
  }
  return non_finite;
}

EliminationOutcome eliminate_and_respawn(SwarmState& state,
                                         const VoaConfig& config,
                                         const Objective& objective,
                                         RandomSource& rng) {
  std::size_t normals = 0;
  for (const auto& p : state.particles) {
    if (!p.is_vortex()) ++normals;
  }
  if (normals > config.elimination_threshold) return {};

  std::size_t non_finite = 0;
  EliminationOutcome outcome{true, 0};
  std::optional<std::size_t> best_fresh;
  for (std::size_t i = 0; i < state.particles.size(); ++i) {
    auto& p = state.particles[i];
    if (p.is_vortex()) continue;
    p = spawn_particle(config, objective, rng);
    p.fitness = evaluate_counted(state, objective, p.position, non_finite);
    ++outcome.replaced;
    if (!best_fresh || comparable_fitness(p.fitness) <
                           comparable_fitness(
                               state.particles[*best_fresh].fitness)) {
      best_fresh = i;
    }
  }

  // A fresh particle that beats the record takes it over, so the record
  // stays the minimum of every evaluation made.
  if (best_fresh) {
    auto& p = state.particles[*best_fresh];
    if (comparable_fitness(p.fitness) <
        comparable_fitness(state.best_fitness)) {
      p.status = Status::Vortex;
      state.best_index = *best_fresh;
      state.best_position = p.position;
      state.best_fitness = p.fitness;
      state.best_vorticity = p.vorticity;
    }
  }
  return outcome;
}

IterationTrace snapshot(const SwarmState& state, bool eliminated,
                        std::size_t non_finite) {
  IterationTrace row;
  row.iteration = state.iteration;
  row.best_fitness_so_far = state.best_fitness;
  row.mean_fitness = mean_fitness(state);
  for (const auto& p : state.particles) {
    if (p.is_vortex()) ++row.vortex_count;
  }
  row.eliminations_triggered = eliminated;
  row.non_finite_evaluations = non_finite;
  return row;
}

IterationTrace step(SwarmState& state, const VoaConfig& config,
                    const Objective& objective, RandomSource& rng) {
  const std::size_t non_finite_before = state.non_finite_evaluations;
  mark_vortices(state);
  apply_global_pull(state, config, rng);
  apply_vortex_decay(state, rng);
  apply_position_update(state, config, objective, rng);
  refresh_fitness_and_best(state, objective);
  const auto outcome = eliminate_and_respawn(state, config, objective, rng);
  ++state.iteration;
  return snapshot(state, outcome.triggered,
                  state.non_finite_evaluations - non_finite_before);
}

RunReport run(const VoaConfig& config, const Objective& objective) {
  const auto start = std::chrono::steady_clock::now();

  RandomSource rng(config.seed);
  SwarmState state = initialize_swarm(config, objective, rng);

  RunReport report;
  report.seed = config.seed;
  report.config = config;
  report.trace.reserve(config.max_iterations + 1);
  report.trace.push_back(snapshot(state, false, state.non_finite_evaluations));

  auto reached_target = [&] {
    return config.target_fitness &&
           comparable_fitness(state.best_fitness) <= *config.target_fitness;
  };
  while (state.iteration < config.max_iterations && !reached_target()) {
    report.trace.push_back(step(state, config, objective, rng));
  }

  report.best_position = state.best_position;
  report.best_fitness = state.best_fitness;
  report.evaluations = state.evaluations;
  report.iterations_executed = state.iteration;
  report.wall_time_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return report;
}

}  // namespace voa
