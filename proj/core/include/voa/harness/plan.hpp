#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "voa/types.hpp"

namespace voa::harness {

/// One (function, dimension) cell of the experiment grid.
struct Cell {
  std::string function;
  std::size_t dimension = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Raw user choices before validation. Unset optionals fall back to the
/// defaults of the published experiment (50 particles, 5000 iterations,
/// initial vorticity 0.5, limits +-7, elimination 50, 20 seeds from 1).
struct PlanOptions {
  std::vector<std::string> functions;
  std::vector<std::size_t> dimensions;
  std::size_t n_seeds = 20;
  std::uint64_t base_seed = 1;
  std::optional<std::size_t> particles;
  std::optional<std::size_t> iterations;
  std::optional<double> init_vorticity;
  std::optional<double> max_vorticity;
  std::optional<double> min_vorticity;
  std::optional<std::size_t> elimination;
  std::optional<double> epsilon;
  std::optional<double> target_fitness;
  bool scalar_draws = false;
  std::filesystem::path out_dir = "results";
  std::optional<std::filesystem::path> trace_dir;
  bool json = false;
  std::size_t threads = 0;
};

struct ExperimentPlan {
  std::vector<Cell> cells;
  std::vector<std::uint64_t> seeds;
  VoaConfig config;
  std::filesystem::path out_dir = "results";
  std::optional<std::filesystem::path> trace_dir;
  bool json = false;
  // 0 selects std::thread::hardware_concurrency().
  std::size_t threads = 0;
};

/// Every (function, dimension) pair of the published results table, in
/// table order.
std::vector<Cell> table_cells();

/// Resolves defaults, expands the cell list, and validates everything.
/// With no functions and no dimensions the full results table is planned;
/// with dimensions only, every function supporting them is used.
/// Throws ConfigError (or a subclass) on any invalid input.
ExperimentPlan build_plan(const PlanOptions& options);

/// Throws ConfigError if any cell is not registry-valid, the seed list is
/// empty or repeats, or the configuration is invalid.
void validate_plan(const ExperimentPlan& plan);

}  // namespace voa::harness
