#include <benchmark/benchmark.h>

#include "voa/benchmark_suite.hpp"
#include "voa/engine.hpp"

namespace {

// One iteration of the loop at the default swarm size.
void BM_Step(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto objective = voa::suite::registry_lookup("rosenbrock", dim);
  voa::VoaConfig config;
  voa::RandomSource rng(config.seed);
  auto swarm = voa::initialize_swarm(config, objective, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(voa::step(swarm, config, objective, rng));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(config.n_particles));
}
BENCHMARK(BM_Step)->Arg(2)->Arg(10)->Arg(30);

// A full run with the published settings (one results-table cell, one seed).
void BM_FullRun(benchmark::State& state) {
  const auto objective = voa::suite::registry_lookup("sphere", 30);
  voa::VoaConfig config;
  for (auto _ : state) {
    benchmark::DoNotOptimize(voa::run(config, objective).best_fitness);
  }
}
BENCHMARK(BM_FullRun)->Unit(benchmark::kMillisecond);

}  // namespace
