#pragma once

// Closed-form test objectives with known global minima, and a registry that
// builds fully populated Objective instances by name and dimension.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "voa/types.hpp"

namespace voa::suite {

double booth(double x, double y);
double beale(double x, double y);
/// Full Goldstein-Price function; minimum 3 at (0, -1).
double goldstein_price(double x, double y);
double mccormick(double x, double y);
double three_hump_camel(double x, double y);
double sphere(std::span<const double> x);
/// Sum over consecutive pairs; requires x.size() >= 2.
double rosenbrock(std::span<const double> x);

/// Unknown function name.
class UnknownObjectiveError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/// Known function, unsupported dimension.
class DimensionError : public ConfigError {
public:
  using ConfigError::ConfigError;
};

struct BenchmarkSpec {
  std::string name;
  // Fixed dimension for the two-variable functions; nullopt for functions
  // defined for any dimension >= min_dimension.
  std::optional<std::size_t> fixed_dimension;
  std::size_t min_dimension = 2;
  // Per-coordinate domain; a single entry applies to every coordinate.
  std::vector<Interval> domain;
  double known_minimum_value = 0.0;
  // Per-coordinate minimizer; a single entry applies to every coordinate.
  std::vector<double> known_minimizer;
  // Dimensions reported in the published results grid.
  std::vector<std::size_t> table_dimensions;

  bool supports(std::size_t dimension) const noexcept;
};

/// The seven registered objectives, in results-table order.
const std::vector<BenchmarkSpec>& registry();

/// Throws UnknownObjectiveError.
const BenchmarkSpec& find_spec(std::string_view name);

/// Throws UnknownObjectiveError or DimensionError.
Objective registry_lookup(std::string_view name, std::size_t dimension);

/// Column dimensions of the results grid: 2, 5, 10, 20, 30.
const std::vector<std::size_t>& grid_dimensions();

}  // namespace voa::suite
