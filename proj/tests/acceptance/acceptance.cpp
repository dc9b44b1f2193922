// Acceptance suite: runs the full results-table experiment and the hard
// property checks, printing one PASS/FAIL line per criterion. Exit status is
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/invariant_checker.hpp"
#include "support/objective_oracle.hpp"
#include "voa/benchmark_suite.hpp"
#include "voa/engine.hpp"
#include "voa/harness/report.hpp"
#include "voa/harness/runner.hpp"
#include "voa/harness/summary.hpp"
#include "voa/harness/targets.hpp"

namespace fs = std::filesystem;
using namespace voa;

namespace {

struct Criterion {
  int id;
  std::string title;
  bool passed = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      notes.push_back("violated: " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string strip_wall_time(const std::string& csv) {
  std::istringstream in(csv);
  std::string out;
  for (std::string line; std::getline(in, line);) {
    std::size_t start = 0;
    for (int i = 0; i < 6; ++i) start = line.find(',', start) + 1;
    const std::size_t end = line.find(',', start);
    out += line.substr(0, start) + line.substr(end + 1) + "\n";
  }
  return out;
}

harness::ExperimentPlan default_plan(const fs::path& out) {
  harness::PlanOptions options;
  options.out_dir = out;
  return harness::build_plan(options);
}

// Criteria 1-5: medians of the 20-seed results table against the targets.
void table_criteria(const std::vector<harness::SummaryRow>& rows,
                    std::vector<Criterion>& out) {
  auto group = [](const harness::Target& t) {
    if (t.function == "goldstein_price") return 2;
    if (t.function == "mccormick") return 3;
    if (t.function == "sphere" && t.dimension > 2) return 4;
    if (t.function == "rosenbrock") return 5;
    return 1;
  };
  std::vector<Criterion> crit{
      {1, "Booth, Beale, Three-hump, Sphere d=2: median <= 1e-4"},
      {2, "Goldstein-Price d=2: |median - 3| <= 1e-3"},
      {3, "McCormick d=2: |median + 1.9133| <= 1e-3"},
      {4, "Sphere d=5,10,20,30: median <= 1e-4"},
      {5, "Rosenbrock: <=1e-3 (d=2,5), <=1e-2 (d=10), <=5e-2 (d=20,30)"}};
  const auto outcomes = harness::check(rows);
  for (const auto& t : harness::table_targets()) {
    auto& c = crit[group(t) - 1];
    auto it = std::find_if(outcomes.begin(), outcomes.end(), [&](const auto& o) {
      return o.target.function == t.function &&
             o.target.dimension == t.dimension;
    });
    if (it == outcomes.end()) {
      c.require(false, t.function + " d=" + std::to_string(t.dimension) +
                           " missing from the summary");
      continue;
    }
    const std::string line = t.function + " d=" + std::to_string(t.dimension) +
                             " median=" + harness::format_sci6(it->median) +
                             " (" + t.describe() + ", paper " +
                             harness::format_display(t.paper_value) + ")";
    if (it->passed) {
      c.note("ok: " + line);
    } else {
      c.require(false, line);
    }
  }
  for (auto& c : crit) out.push_back(std::move(c));
}

Criterion oracle_criterion() {
  Criterion c{6, "Objectives match the straight-line oracle (rel <= 1e-12) "
                 "and reproduce known minima (<= 1e-4)"};
  std::mt19937_64 gen(6);
  for (const auto& spec : suite::registry()) {
    for (std::size_t d : spec.table_dimensions) {
      const auto o = suite::registry_lookup(spec.name, d);
      double worst = 0.0;
      std::vector<double> x(d);
      for (int n = 0; n < 1000; ++n) {
        for (std::size_t k = 0; k < d; ++k) {
          std::uniform_real_distribution<double> u(o.bounds[k].lower,
                                                   o.bounds[k].upper);
          x[k] = u(gen);
        }
        const double want = oracle::evaluate(spec.name, x);
        worst = std::max(worst, std::abs(o(x) - want) /
                                    std::max(std::abs(want), 1e-300));
      }
      const std::string cell = spec.name + " d=" + std::to_string(d);
      c.require(worst <= 1e-12, cell + " worst relative error " +
                                    fmt("%.3e", worst));
      const double at_min = o(*o.known_minimizer);
      c.require(std::abs(at_min - *o.known_minimum_value) <= 1e-4,
                cell + " value at known minimizer " + fmt("%.6f", at_min));
    }
  }
  return c;
}

Criterion equation_criterion() {
  Criterion c{7, "Update rules match hand-computed examples to 1e-12"};
  auto near = [](double a, double b) { return std::abs(a - b) <= 1e-12; };
  c.require(near(eq1_best_vorticity_kick(0.5, 0.0), 0.5), "kick r=0");
  c.require(near(eq1_best_vorticity_kick(0.5, 0.2), 0.6), "kick r=0.2");
  c.require(near(eq1_best_vorticity_kick(6.0, 0.9), 7.0), "kick clamp");
  c.require(near(eq2_global_pull(0.5, 0.6, 0.0, 1e-9), 0.5), "pull r=0");
  c.require(near(eq2_global_pull(0.5, 0.6, 0.5, 1e-9), 1.1), "pull r=0.5");
  c.require(near(eq2_global_pull(0.0, 7.0, 1.0, 1e-9), 7.0),
            "pull epsilon guard + clamp");
  c.require(near(eq3_vortex_decay(2.0, 0.0), 0.0), "decay r=0");
  c.require(near(eq3_vortex_decay(2.0, 0.25), 0.5), "decay r=0.25");
  c.require(near(eq3_vortex_decay(-3.0, 0.5), -1.5), "decay sign");

  const std::vector<Interval> wide(2, {-10.0, 10.0});
  const std::vector<Interval> box(2, {-4.5, 4.5});
  const std::vector<double> p11{1.0, 1.0}, g33{3.0, 3.0};
  auto a = eq4_position_update(p11, 0.5, g33, 1.0, wide);
  c.require(near(a[0], 2.0) && near(a[1], 2.0), "position hand example");
  auto b = eq4_position_update(g33, 4.0, g33, 0.7, wide);
  c.require(b == g33, "position fixed point");
  const std::vector<double> p44{4.0, 4.0}, gm4{-4.0, -4.0};
  auto d = eq4_position_update(p44, 7.0, gm4, 1.0, box);
  c.require(near(d[0], -4.5) && near(d[1], -4.5), "position clamp");
  return c;
}

Criterion invariant_criterion() {
  Criterion c{8, "Invariants hold at every sub-step (Sphere d=5, 500 "
                 "iterations, 5 seeds)"};
  const auto obj = suite::registry_lookup("sphere", 5);
  std::size_t checks = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    VoaConfig config;
    config.max_iterations = 500;
    config.seed = seed;
    const auto result = audit::Auditor(config, obj).run();
    checks += result.violations.checks;
    for (const auto& [name, count] : result.violations.counts) {
      c.require(count == 0, "seed " + std::to_string(seed) + ": " + name +
                                " x" + std::to_string(count));
    }
    const auto report = run(config, obj);
    c.require(report.best_fitness == result.final_state.best_fitness,
              "audited run diverges from the driver for seed " +
                  std::to_string(seed));
  }
  c.note(std::to_string(checks) + " checks");
  return c;
}

Criterion determinism_criterion(const fs::path& first_out,
                                const fs::path& workdir) {
  Criterion c{9, "Two executions of the default plan give byte-identical "
                 "reports (wall time excluded)"};
  const auto plan = default_plan(workdir / "second");
  const auto records = harness::execute_plan(plan);
  const auto rows = harness::summarize(records);
  harness::write_reports(records, rows, plan);

  c.require(strip_wall_time(slurp(first_out / "runs.csv")) ==
                strip_wall_time(slurp(plan.out_dir / "runs.csv")),
            "runs.csv differs");
  for (const char* f : {"summary.csv", "summary_stats.csv"}) {
    c.require(slurp(first_out / f) == slurp(plan.out_dir / f),
              std::string(f) + " differs");
  }
  return c;
}

Criterion degenerate_criterion() {
  Criterion c{10, "Degenerate inputs: zero iterations, flat fitness, zero "
                  "vorticity under the pull"};
  VoaConfig config;
  config.max_iterations = 0;
  const auto obj = suite::registry_lookup("booth", 2);
  const auto report = run(config, obj);
  RandomSource rng(config.seed);
  const auto init = initialize_swarm(config, obj, rng);
  c.require(report.best_fitness == init.best_fitness &&
                report.best_position == init.best_position,
            "zero-iteration run differs from initialization");

  Objective flat;
  flat.name = "flat";
  flat.dimension = 3;
  flat.bounds = std::vector<Interval>(3, {-1.0, 1.0});
  flat.evaluate = [](std::span<const double>) { return 2.5; };
  VoaConfig fc;
  RandomSource frng(4);
  auto s = initialize_swarm(fc, flat, frng);
  mark_vortices(s);
  c.require(std::all_of(s.particles.begin(), s.particles.end(),
                        [](const Particle& p) { return p.is_vortex(); }),
            "identical fitnesses not all vortex");

  const double v = eq2_global_pull(0.0, 7.0, 1.0, 1e-9);
  c.require(std::isfinite(v) && v <= 7.0 && v >= -7.0,
            "zero vorticity pull not finite/clamped");
  return c;
}

Criterion grid_criterion(const fs::path& out) {
  Criterion c{11, "Summary grid is 7 x 5 with NA exactly where the table "
                  "prints x"};
  std::istringstream in(slurp(out / "summary.csv"));
  std::vector<std::vector<std::string>> rows;
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  c.require(rows.size() == 8, "expected header + 7 rows");
  if (rows.empty()) return c;
  c.require(rows[0] == std::vector<std::string>{"function", "2", "5", "10",
                                                "20", "30"},
            "header");
  const std::vector<std::string> names{"booth",     "beale",
                                       "goldstein_price", "mccormick",
                                       "three_hump_camel", "sphere",
                                       "rosenbrock"};
  for (std::size_t r = 1; r < rows.size() && r <= names.size(); ++r) {
    const auto& row = rows[r];
    c.require(row.size() == 6, names[r - 1] + " has " +
                                   std::to_string(row.size()) + " fields");
    if (row.size() != 6) continue;
    c.require(row[0] == names[r - 1], "row " + std::to_string(r) + " name");
    const bool scalable = r >= 6;
    for (std::size_t k = 1; k < 6; ++k) {
      const bool expect_na = !scalable && k > 1;
      c.require((row[k] == "NA") == expect_na && !row[k].empty(),
                names[r - 1] + " column " + rows[0][k]);
    }
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  fs::path workdir = fs::temp_directory_path() / "voa_acceptance";
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::strcmp(argv[i], "--workdir") == 0) workdir = argv[i + 1];
  }
  fs::remove_all(workdir);
  fs::create_directories(workdir);

  const auto start = std::chrono::steady_clock::now();
  std::vector<Criterion> criteria;

  const auto plan = default_plan(workdir / "first");
  const auto records = harness::execute_plan(plan);
  const auto rows = harness::summarize(records);
  harness::write_reports(records, rows, plan);
  std::printf("%s\n", harness::display_grid(rows).c_str());

  table_criteria(rows, criteria);
  criteria.push_back(oracle_criterion());
  criteria.push_back(equation_criterion());
  criteria.push_back(invariant_criterion());
  criteria.push_back(determinism_criterion(plan.out_dir, workdir));
  criteria.push_back(degenerate_criterion());
  criteria.push_back(grid_criterion(plan.out_dir));

  bool all = true;
  for (const auto& c : criteria) {
    std::printf("[%s] criterion %2d: %s\n", c.passed ? "PASS" : "FAIL", c.id,
                c.title.c_str());
    for (const auto& n : c.notes) std::printf("        %s\n", n.c_str());
    all = all && c.passed;
  }
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  std::printf("acceptance: %s in %.1f s\n", all ? "all criteria passed"
                                                 : "some criteria FAILED",
              secs);
  return all ? 0 : 1;
}
