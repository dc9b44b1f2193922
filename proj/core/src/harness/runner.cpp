#include "voa/harness/runner.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "voa/benchmark_suite.hpp"

namespace voa::harness {

std::vector<RunRecord> execute_plan(const ExperimentPlan& plan,
                                    bool keep_traces) {
  validate_plan(plan);

  std::vector<RunRecord> records;
  records.reserve(plan.cells.size() * plan.seeds.size());
  for (const auto& cell : plan.cells) {
    for (std::uint64_t seed : plan.seeds) {
      records.push_back({cell.function, cell.dimension, seed, {}, {}});
    }
  }

  const bool traces = keep_traces || plan.trace_dir.has_value();
  auto run_one = [&](RunRecord& rec) {
    try {
      const Objective objective =
          suite::registry_lookup(rec.function, rec.dimension);
      VoaConfig config = plan.config;
      config.seed = rec.seed;
      rec.report = voa::run(config, objective);
      if (!traces) {
        rec.report.trace.clear();
        rec.report.trace.shrink_to_fit();
      }
    } catch (const std::exception& e) {
      rec.report = {};
      rec.error = e.what();
    }
  };

  std::size_t workers = plan.threads;
  if (workers == 0) {
    workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  }
  workers = std::min(workers, records.size());

  if (workers <= 1) {
    for (auto& rec : records) run_one(rec);
    return records;
  }

  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < records.size(); i = next++) {
          run_one(records[i]);
        }
      });
    }
  }
  return records;
}

}  // namespace voa::harness
