#include "voa/harness/plan.hpp"

#include <algorithm>
#include <set>

#include "voa/benchmark_suite.hpp"

namespace voa::harness {

std::vector<Cell> table_cells() {
  std::vector<Cell> cells;
  for (const auto& spec : suite::registry()) {
    for (std::size_t d : spec.table_dimensions) {
      cells.push_back({spec.name, d});
    }
  }
  return cells;
}

ExperimentPlan build_plan(const PlanOptions& options) {
  ExperimentPlan plan;

  if (options.functions.empty() && options.dimensions.empty()) {
    plan.cells = table_cells();
  } else if (options.functions.empty()) {
    for (const auto& spec : suite::registry()) {
      for (std::size_t d : options.dimensions) {
        if (spec.supports(d)) plan.cells.push_back({spec.name, d});
      }
    }
    if (plan.cells.empty()) {
      throw suite::DimensionError("no registered function supports the "
                                  "requested dimensions");
    }
  } else {
    for (const auto& name : options.functions) {
      const auto& spec = suite::find_spec(name);
      const auto& dims = options.dimensions.empty() ? spec.table_dimensions
                                                    : options.dimensions;
      for (std::size_t d : dims) plan.cells.push_back({spec.name, d});
    }
  }

  if (options.n_seeds == 0) {
    throw ConfigError("--seeds must be at least 1");
  }
  for (std::size_t i = 0; i < options.n_seeds; ++i) {
    plan.seeds.push_back(options.base_seed + i);
  }

  VoaConfig& c = plan.config;
  if (options.particles) c.n_particles = *options.particles;
  if (options.iterations) c.max_iterations = *options.iterations;
  if (options.init_vorticity) c.initial_vorticity = *options.init_vorticity;
  if (options.max_vorticity) {
    c.max_vorticity = *options.max_vorticity;
    c.min_vorticity = -*options.max_vorticity;
  }
  if (options.min_vorticity) c.min_vorticity = *options.min_vorticity;
  c.elimination_threshold =
      options.elimination ? *options.elimination
                          : std::min<std::size_t>(50, c.n_particles);
  if (options.epsilon) c.eq2_epsilon = *options.epsilon;
  c.target_fitness = options.target_fitness;
  c.per_coordinate_draws = !options.scalar_draws;

  plan.out_dir = options.out_dir;
  plan.trace_dir = options.trace_dir;
  plan.json = options.json;
  plan.threads = options.threads;

  validate_plan(plan);
  return plan;
}

void validate_plan(const ExperimentPlan& plan) {
  if (plan.cells.empty()) throw ConfigError("plan has no cells");
  for (const auto& cell : plan.cells) {
    const auto& spec = suite::find_spec(cell.function);
    if (!spec.supports(cell.dimension)) {
      throw suite::DimensionError(
          "'" + cell.function + "' is not defined for dimension " +
          std::to_string(cell.dimension));
    }
  }
  if (plan.seeds.empty()) throw ConfigError("plan has no seeds");
  std::set<std::uint64_t> unique(plan.seeds.begin(), plan.seeds.end());
  if (unique.size() != plan.seeds.size()) {
    throw ConfigError("plan seeds must be pairwise distinct");
  }
  std::set<std::pair<std::string, std::size_t>> seen;
  for (const auto& cell : plan.cells) {
    if (!seen.emplace(cell.function, cell.dimension).second) {
      throw ConfigError("cell " + cell.function + " d=" +
                        std::to_string(cell.dimension) +
                        " appears more than once");
    }
  }
  plan.config.validate();
}

}  // namespace voa::harness
