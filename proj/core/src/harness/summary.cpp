#include "voa/harness/summary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

namespace voa::harness {

std::optional<double> paper_reference_value(const std::string& function,
                                            std::size_t dimension) {
  static const std::map<std::pair<std::string, std::size_t>, double> table{
      {{"booth", 2}, 0.0},
      {{"beale", 2}, 0.0},
      {{"goldstein_price", 2}, 3.0},
      {{"mccormick", 2}, -1.9133},
      {{"three_hump_camel", 2}, 0.0},
      {{"sphere", 2}, 0.0},
      {{"sphere", 5}, 0.0},
      {{"sphere", 10}, 0.0},
      {{"sphere", 20}, 0.0},
      {{"sphere", 30}, 0.0},
      {{"rosenbrock", 2}, 0.0},
      {{"rosenbrock", 5}, 0.0},
      {{"rosenbrock", 10}, 0.0002},
      {{"rosenbrock", 20}, 0.0027},
      {{"rosenbrock", 30}, 0.0023},
  };
  auto it = table.find({function, dimension});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records) {
  std::vector<SummaryRow> rows;
  std::vector<std::vector<double>> bests;

  for (const auto& rec : records) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const SummaryRow& r) {
      return r.function == rec.function && r.dimension == rec.dimension;
    });
    std::size_t idx;
    if (it == rows.end()) {
      SummaryRow row;
      row.function = rec.function;
      row.dimension = rec.dimension;
      row.paper_reference_value =
          paper_reference_value(rec.function, rec.dimension);
      rows.push_back(row);
      bests.emplace_back();
      idx = rows.size() - 1;
    } else {
      idx = static_cast<std::size_t>(it - rows.begin());
    }
    ++rows[idx].n_seeds;
    if (rec.ok()) {
      bests[idx].push_back(rec.report.best_fitness);
    } else {
      ++rows[idx].n_failed;
    }
  }

  constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t g = 0; g < rows.size(); ++g) {
    auto& v = bests[g];
    auto& row = rows[g];
    if (v.empty()) {
      row.best_of_best = row.median_best = row.mean_best = row.stddev_best =
          row.worst_best = kNaN;
      continue;
    }
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    row.best_of_best = v.front();
    row.worst_best = v.back();
    row.median_best = n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
    row.mean_best = std::accumulate(v.begin(), v.end(), 0.0) /
                    static_cast<double>(n);
    if (n > 1) {
      double ss = 0.0;
      for (double x : v) ss += (x - row.mean_best) * (x - row.mean_best);
      row.stddev_best = std::sqrt(ss / static_cast<double>(n - 1));
    }
  }
  return rows;
}

}  // namespace voa::harness
