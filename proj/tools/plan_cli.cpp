#include "plan_cli.hpp"

#include <algorithm>

namespace voa::cli {

void add_plan_options(CLI::App& app, harness::PlanOptions& o) {
  app.set_config("--config", "", "Read flag values from a key = value file");
  app.allow_config_extras(CLI::config_extras_mode::error);

  app.add_option("--function", o.functions,
                 "Objective name(s), comma separated")
      ->delimiter(',');
  app.add_option("--dim", o.dimensions, "Dimension(s), comma separated")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  app.add_option("--seeds", o.n_seeds, "Number of seeds per cell")
      ->check(CLI::PositiveNumber);
  app.add_option("--base-seed", o.base_seed, "First seed");
  app.add_option("--particles", o.particles, "Swarm size N");
  app.add_option("--iterations", o.iterations, "Iterations per run");
  app.add_option("--init-vorticity", o.init_vorticity,
                 "Initial vorticity of every particle");
  app.add_option("--max-vorticity", o.max_vorticity,
                 "Vorticity upper limit (lower limit is its negative)");
  app.add_option("--min-vorticity", o.min_vorticity,
                 "Override the vorticity lower limit");
  app.add_option("--elimination", o.elimination,
                 "Respawn normal particles when at most this many remain");
  app.add_option("--epsilon", o.epsilon,
                 "Smallest |vorticity| used as a divisor in the global pull");
  app.add_option("--target-fitness", o.target_fitness,
                 "Stop a run once the best fitness reaches this value");
  app.add_flag("--scalar-draws", o.scalar_draws,
               "One random draw per particle in the position update");
  app.add_option("--out", o.out_dir, "Output directory for reports");
  app.add_option("--trace-dir", o.trace_dir,
                 "Write one convergence trace CSV per run here");
  app.add_flag("--json", o.json, "Also write report.json");
  app.add_option("--threads", o.threads, "Worker threads (0 = all cores)");
}

harness::ExperimentPlan parse_plan(const std::vector<std::string>& args) {
  CLI::App app{"voa plan"};
  harness::PlanOptions options;
  add_plan_options(app, options);

  // CLI11 consumes the vector from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }
  return harness::build_plan(options);
}

}  // namespace voa::cli
