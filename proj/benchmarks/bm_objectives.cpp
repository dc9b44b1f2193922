#include <benchmark/benchmark.h>

#include <vector>

#include "voa/benchmark_suite.hpp"
#include "voa/random.hpp"

namespace {

void BM_Evaluate(benchmark::State& state, const char* name) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto objective = voa::suite::registry_lookup(name, dim);
  voa::RandomSource rng(7);
  std::vector<double> x;
  for (const auto& b : objective.bounds) x.push_back(rng.uniform_in(b.lower, b.upper));
  for (auto _ : state) {
    benchmark::DoNotOptimize(objective(x));
  }
}

BENCHMARK_CAPTURE(BM_Evaluate, booth, "booth")->Arg(2);
BENCHMARK_CAPTURE(BM_Evaluate, goldstein_price, "goldstein_price")->Arg(2);
BENCHMARK_CAPTURE(BM_Evaluate, mccormick, "mccormick")->Arg(2);
BENCHMARK_CAPTURE(BM_Evaluate, sphere, "sphere")->Arg(2)->Arg(30);
BENCHMARK_CAPTURE(BM_Evaluate, rosenbrock, "rosenbrock")->Arg(2)->Arg(30);

void BM_UniformUnit(benchmark::State& state) {
  voa::RandomSource rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(rng.uniform_unit());
}
BENCHMARK(BM_UniformUnit);

}  // namespace
