#include "voa/benchmark_suite.hpp"

#include <algorithm>
#include <cmath>

namespace voa::suite {
namespace {

double sq(double v) { return v * v; }

double require_pair(std::span<const double> x, double (*f)(double, double)) {
  if (x.size() != 2) {
    throw std::invalid_argument("two-variable objective called with " +
                                std::to_string(x.size()) + " coordinates");
  }
  return f(x[0], x[1]);
}

Evaluator pair_evaluator(double (*f)(double, double)) {
  return [f](std::span<const double> x) { return require_pair(x, f); };
}

Evaluator evaluator_for(std::string_view name) {
  if (name == "booth") return pair_evaluator(&booth);
  if (name == "beale") return pair_evaluator(&beale);
  if (name == "goldstein_price") return pair_evaluator(&goldstein_price);
  if (name == "mccormick") return pair_evaluator(&mccormick);
  if (name == "three_hump_camel") return pair_evaluator(&three_hump_camel);
  if (name == "sphere") return &sphere;
  if (name == "rosenbrock") return &rosenbrock;
  throw UnknownObjectiveError("no evaluator for '" + std::string(name) + "'");
}

std::vector<BenchmarkSpec> build_registry() {
  const std::vector<std::size_t> two{2};
  const std::vector<std::size_t> scalable{2, 5, 10, 20, 30};
  // clang-format off
  return {
    // Booth is printed with upper bound 1, which excludes its own minimizer
    // (1, 3); the usual symmetric box is used.
    {"booth",            2, 2, {{-10.0, 10.0}},             0.0,     {1.0, 3.0},               two},
    {"beale",            2, 2, {{-4.5, 4.5}},               0.0,     {3.0, 0.5},               two},
    {"goldstein_price",  2, 2, {{-2.0, 2.0}},               3.0,     {0.0, -1.0},              two},
    {"mccormick",        2, 2, {{-1.5, 4.0}, {-3.0, 4.0}},  -1.9133, {-0.54719, -1.54719},     two},
    {"three_hump_camel", 2, 2, {{-5.0, 5.0}},               0.0,     {0.0, 0.0},               two},
    {"sphere",           std::nullopt, 1, {{-100.0, 100.0}}, 0.0,   {0.0},                    scalable},
    {"rosenbrock",       std::nullopt, 2, {{-80.0, 80.0}},   0.0,   {1.0},                    scalable},
  };
  // clang-format on
}

}  // namespace

double booth(double x, double y) {
  return sq(x + 2.0 * y - 7.0) + sq(2.0 * x + y - 5.0);
}

double beale(double x, double y) {
  return sq(1.5 - x + x * y) + sq(2.25 - x + x * y * y) +
         sq(2.625 - x + x * y * y * y);
}

double goldstein_price(double x, double y) {
  const double a = 1.0 + sq(x + y + 1.0) * (19.0 - 14.0 * x + 3.0 * x * x -
                                            14.0 * y + 6.0 * x * y +
                                            3.0 * y * y);
  const double b = 30.0 + sq(2.0 * x - 3.0 * y) *
                              (18.0 - 32.0 * x + 12.0 * x * x + 48.0 * y -
                               36.0 * x * y + 27.0 * y * y);
  return a * b;
}

double mccormick(double x, double y) {
  return std::sin(x + y) + sq(x - y) - 1.5 * x + 2.5 * y + 1.0;
}

double three_hump_camel(double x, double y) {
  const double x2 = x * x;
  return 2.0 * x2 - 1.05 * x2 * x2 + x2 * x2 * x2 / 6.0 + x * y + y * y;
}

double sphere(std::span<const double> x) {
  double sum = 0.0;
  for (double v : x) sum += v * v;
  return sum;
}

double rosenbrock(std::span<const double> x) {
  if (x.size() < 2) {
    throw std::invalid_argument("rosenbrock needs at least two coordinates");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    sum += 100.0 * sq(x[i + 1] - x[i] * x[i]) + sq(x[i] - 1.0);
  }
  return sum;
}

bool BenchmarkSpec::supports(std::size_t dimension) const noexcept {
  if (fixed_dimension) return dimension == *fixed_dimension;
  return dimension >= min_dimension;
}

const std::vector<BenchmarkSpec>& registry() {
  static const std::vector<BenchmarkSpec> specs = build_registry();
  return specs;
}

const BenchmarkSpec& find_spec(std::string_view name) {
  const auto& specs = registry();
  auto it = std::find_if(specs.begin(), specs.end(),
                         [&](const BenchmarkSpec& s) { return s.name == name; });
  if (it == specs.end()) {
    throw UnknownObjectiveError("unknown objective '" + std::string(name) +
                                "'");
  }
  return *it;
}

Objective registry_lookup(std::string_view name, std::size_t dimension) {
  const BenchmarkSpec& spec = find_spec(name);
  if (!spec.supports(dimension)) {
    std::string allowed =
        spec.fixed_dimension
            ? "exactly " + std::to_string(*spec.fixed_dimension)
            : "at least " + std::to_string(spec.min_dimension);
    throw DimensionError("objective '" + spec.name + "' does not support " +
                         "dimension " + std::to_string(dimension) + " (" +
                         allowed + ")");
  }

  auto expand = [dimension](const auto& v) {
    using T = typename std::decay_t<decltype(v)>::value_type;
    return v.size() == 1 ? std::vector<T>(dimension, v.front())
                         : std::vector<T>(v.begin(), v.end());
  };

  Objective obj;
  obj.name = spec.name;
  obj.dimension = dimension;
  obj.bounds = expand(spec.domain);
  obj.evaluate = evaluator_for(spec.name);
  obj.known_minimum_value = spec.known_minimum_value;
  obj.known_minimizer = expand(spec.known_minimizer);
  return obj;
}

const std::vector<std::size_t>& grid_dimensions() {
  static const std::vector<std::size_t> dims{2, 5, 10, 20, 30};
  return dims;
}

}  // namespace voa::suite
