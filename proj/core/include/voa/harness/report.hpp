#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "voa/harness/plan.hpp"
#include "voa/harness/runner.hpp"
#include "voa/harness/summary.hpp"

namespace voa::harness {

inline constexpr const char* kRunsHeader =
    "function,dimension,seed,best_fitness,evaluations,iterations,"
    "wall_time_ms,position";
inline constexpr const char* kTraceHeader =
    "iteration,best_fitness,mean_fitness,vortex_count,eliminated";

/// Raised when a report file cannot be written or read.
class ReportError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Round-trippable scientific notation (17 significant digits).
std::string format_full(double v);
/// Scientific notation with 6 significant digits.
std::string format_sci6(double v);
/// Fixed 4-decimal display rounding; "-0.0000" is printed as "0.0000".
std::string format_display(double v);

std::string runs_csv(const std::vector<RunRecord>& records);
/// Function x dimension grid of median bests: `NA` where the function is
/// not defined for the dimension, empty where it was not run.
std::string summary_grid_csv(const std::vector<SummaryRow>& summaries);
std::string summary_stats_csv(const std::vector<SummaryRow>& summaries);
std::string trace_csv(const std::vector<IterationTrace>& trace);
std::string report_json(const std::vector<RunRecord>& records,
                        const std::vector<SummaryRow>& summaries,
                        const ExperimentPlan& plan);
/// Human-readable grid rounded to 4 decimals.
std::string display_grid(const std::vector<SummaryRow>& summaries);

std::filesystem::path trace_file_name(const RunRecord& record);

/// Writes runs.csv, summary.csv, summary_stats.csv (and report.json when
/// plan.json) into plan.out_dir, plus one trace file per run into
/// plan.trace_dir when set. Directories are created as needed.
void write_reports(const std::vector<RunRecord>& records,
                   const std::vector<SummaryRow>& summaries,
                   const ExperimentPlan& plan);

/// Parses a runs.csv produced by runs_csv. Only the fields needed for
/// summarizing are restored (no trace, no configuration echo).
std::vector<RunRecord> read_runs_csv(const std::filesystem::path& path);

}  // namespace voa::harness
