#include "voa/harness/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "voa/benchmark_suite.hpp"

namespace voa::harness {
namespace {

std::string to_chars_sci(double v, int precision) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v,
                           std::chars_format::scientific, precision);
  return std::string(buf, res.ptr);
}

std::string join_position(const std::vector<double>& x) {
  std::string s;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k) s += ';';
    s += format_full(x[k]);
  }
  return s;
}

const SummaryRow* find_row(const std::vector<SummaryRow>& rows,
                           const std::string& function, std::size_t d) {
  for (const auto& r : rows) {
    if (r.function == function && r.dimension == d) return &r;
  }
  return nullptr;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw ReportError("cannot open '" + path.string() + "' for writing");
  }
  out << body;
  out.flush();
  if (!out) {
    throw ReportError("failed while writing '" + path.string() + "'");
  }
}

void ensure_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw ReportError("cannot create directory '" + dir.string() +
                      "': " + ec.message());
  }
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

template <typename T>
T parse_number(const std::string& text, const std::string& where) {
  if (text == "nan") {
    if constexpr (std::is_floating_point_v<T>) {
      return std::numeric_limits<T>::quiet_NaN();
    }
  }
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ReportError("malformed number '" + text + "' in " + where);
  }
  return value;
}

}  // namespace

std::string format_full(double v) { return to_chars_sci(v, 16); }

std::string format_sci6(double v) { return to_chars_sci(v, 5); }

std::string format_display(double v) {
  if (!std::isfinite(v)) return to_chars_sci(v, 0);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

std::string runs_csv(const std::vector<RunRecord>& records) {
  std::ostringstream os;
  os << kRunsHeader << '\n';
  char wall[32];
  for (const auto& rec : records) {
    os << rec.function << ',' << rec.dimension << ',' << rec.seed << ',';
    if (rec.ok()) {
      std::snprintf(wall, sizeof wall, "%.3f", rec.report.wall_time_ms);
      os << format_full(rec.report.best_fitness) << ','
         << rec.report.evaluations << ',' << rec.report.iterations_executed
         << ',' << wall << ',' << join_position(rec.report.best_position);
    } else {
      os << "nan,0,0,0.000,";
    }
    os << '\n';
  }
  return os.str();
}

std::string summary_grid_csv(const std::vector<SummaryRow>& summaries) {
  std::ostringstream os;
  os << "function";
  for (std::size_t d : suite::grid_dimensions()) os << ',' << d;
  os << '\n';
  for (const auto& spec : suite::registry()) {
    os << spec.name;
    for (std::size_t d : suite::grid_dimensions()) {
      os << ',';
      const bool applicable =
          std::find(spec.table_dimensions.begin(), spec.table_dimensions.end(),
                    d) != spec.table_dimensions.end();
      if (!applicable) {
        os << "NA";
      } else if (const auto* row = find_row(summaries, spec.name, d)) {
        os << format_sci6(row->median_best);
      }
    }
    os << '\n';
  }
  return os.str();
}

std::string summary_stats_csv(const std::vector<SummaryRow>& summaries) {
  std::ostringstream os;
  os << "function,dimension,n_seeds,n_failed,best,median,mean,stddev,worst,"
        "paper_value\n";
  for (const auto& r : summaries) {
    os << r.function << ',' << r.dimension << ',' << r.n_seeds << ','
       << r.n_failed << ',' << format_sci6(r.best_of_best) << ','
       << format_sci6(r.median_best) << ',' << format_sci6(r.mean_best) << ','
       << format_sci6(r.stddev_best) << ',' << format_sci6(r.worst_best)
       << ',';
    if (r.paper_reference_value) os << format_sci6(*r.paper_reference_value);
    os << '\n';
  }
  return os.str();
}

std::string trace_csv(const std::vector<IterationTrace>& trace) {
  std::ostringstream os;
  os << kTraceHeader << '\n';
  for (const auto& t : trace) {
    os << t.iteration << ',' << format_full(t.best_fitness_so_far) << ','
       << format_full(t.mean_fitness) << ',' << t.vortex_count << ','
       << (t.eliminations_triggered ? 1 : 0) << '\n';
  }
  return os.str();
}

std::string report_json(const std::vector<RunRecord>& records,
                        const std::vector<SummaryRow>& summaries,
                        const ExperimentPlan& plan) {
  using nlohmann::json;
  const auto& c = plan.config;
  json doc;
  doc["config"] = {
      {"particles", c.n_particles},
      {"iterations", c.max_iterations},
      {"init_vorticity", c.initial_vorticity},
      {"max_vorticity", c.max_vorticity},
      {"min_vorticity", c.min_vorticity},
      {"elimination", c.elimination_threshold},
      {"epsilon", c.eq2_epsilon},
      {"per_coordinate_draws", c.per_coordinate_draws},
  };
  doc["seeds"] = plan.seeds;

  json runs = json::array();
  for (const auto& rec : records) {
    json r{{"function", rec.function},
           {"dimension", rec.dimension},
           {"seed", rec.seed}};
    if (rec.ok()) {
      r["best_fitness"] = rec.report.best_fitness;
      r["best_position"] = rec.report.best_position;
      r["evaluations"] = rec.report.evaluations;
      r["iterations"] = rec.report.iterations_executed;
    } else {
      r["error"] = *rec.error;
    }
    runs.push_back(std::move(r));
  }
  doc["runs"] = std::move(runs);

  json rows = json::array();
  for (const auto& s : summaries) {
    json r{{"function", s.function},     {"dimension", s.dimension},
           {"n_seeds", s.n_seeds},       {"n_failed", s.n_failed},
           {"best", s.best_of_best},     {"median", s.median_best},
           {"mean", s.mean_best},        {"stddev", s.stddev_best},
           {"worst", s.worst_best}};
    if (s.paper_reference_value) r["paper_value"] = *s.paper_reference_value;
    rows.push_back(std::move(r));
  }
  doc["summary"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string display_grid(const std::vector<SummaryRow>& summaries) {
  std::ostringstream os;
  char cell[32];
  std::snprintf(cell, sizeof cell, "%-18s", "function");
  os << cell;
  for (std::size_t d : suite::grid_dimensions()) {
    std::snprintf(cell, sizeof cell, "%12zu", d);
    os << cell;
  }
  os << '\n';
  for (const auto& spec : suite::registry()) {
    std::snprintf(cell, sizeof cell, "%-18s", spec.name.c_str());
    os << cell;
    for (std::size_t d : suite::grid_dimensions()) {
      std::string text = "x";
      if (spec.supports(d) &&
          std::find(spec.table_dimensions.begin(), spec.table_dimensions.end(),
                    d) != spec.table_dimensions.end()) {
        const auto* row = find_row(summaries, spec.name, d);
        text = row ? format_display(row->median_best) : "-";
      }
      std::snprintf(cell, sizeof cell, "%12s", text.c_str());
      os << cell;
    }
    os << '\n';
  }
  return os.str();
}

std::filesystem::path trace_file_name(const RunRecord& record) {
  return record.function + "_d" + std::to_string(record.dimension) + "_s" +
         std::to_string(record.seed) + ".csv";
}

void write_reports(const std::vector<RunRecord>& records,
                   const std::vector<SummaryRow>& summaries,
                   const ExperimentPlan& plan) {
  ensure_directory(plan.out_dir);
  write_file(plan.out_dir / "runs.csv", runs_csv(records));
  write_file(plan.out_dir / "summary.csv", summary_grid_csv(summaries));
  write_file(plan.out_dir / "summary_stats.csv", summary_stats_csv(summaries));
  if (plan.json) {
    write_file(plan.out_dir / "report.json",
               report_json(records, summaries, plan));
  }
  if (plan.trace_dir) {
    ensure_directory(*plan.trace_dir);
    for (const auto& rec : records) {
      if (!rec.ok()) continue;
      write_file(*plan.trace_dir / trace_file_name(rec),
                 trace_csv(rec.report.trace));
    }
  }
}

std::vector<RunRecord> read_runs_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ReportError("cannot open '" + path.string() + "'");

  std::string line;
  if (!std::getline(in, line) || line != kRunsHeader) {
    throw ReportError("'" + path.string() + "' does not start with the runs "
                      "header");
  }
  std::vector<RunRecord> records;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::string where = path.string() + ":" + std::to_string(lineno);
    const auto f = split(line, ',');
    if (f.size() != 8) {
      throw ReportError("expected 8 fields at " + where);
    }
    RunRecord rec;
    rec.function = f[0];
    rec.dimension = parse_number<std::size_t>(f[1], where);
    rec.seed = parse_number<std::uint64_t>(f[2], where);
    rec.report.seed = rec.seed;
    rec.report.best_fitness = parse_number<double>(f[3], where);
    rec.report.evaluations = parse_number<std::size_t>(f[4], where);
    rec.report.iterations_executed = parse_number<std::size_t>(f[5], where);
    rec.report.wall_time_ms = parse_number<double>(f[6], where);
    if (rec.report.evaluations == 0) {
      rec.error = "run failed";
    } else if (!f[7].empty()) {
      for (const auto& c : split(f[7], ';')) {
        rec.report.best_position.push_back(parse_number<double>(c, where));
      }
    }
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace voa::harness
