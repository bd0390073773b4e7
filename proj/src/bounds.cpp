#include "mononeedle/bounds.hpp"

#include <bit>
#include <cmath>

#include "mononeedle/graph.hpp"

namespace mononeedle {

LowerBound lower_bound(int k) {
  if (k < 1) throw InvalidArgument("k must be at least 1");
  const auto& entries = catalog();
  if (entries.empty()) throw InvalidArgument("graph catalog is empty");
  LowerBound best;
  bool first = true;
  for (const auto& entry : entries) {
    MkResult r = solve_mk(entry.graph, k);
    if (first || r.value > best.value) {
      best.value = r.value;
      best.witness = entry.name;
      best.witness_coloring = std::move(r.witness);
      first = false;
    }
  }
  return best;
}

UpperBound upper_bound_construction(int k, double period, int subdivisions, std::int64_t samples, std::uint64_t seed,
                                    const ParallelOptions& options, int max_attempts) {
  const double target = 1.0 / k;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    const std::uint64_t coloring_seed = derive_seed(seed, static_cast<std::uint64_t>(attempt));
    GridColoring grid = make_random_grid(period, subdivisions, k, coloring_seed);
    Estimate est = estimate_p_per(grid, samples, derive_seed(coloring_seed, 1), options);
    if (est.p_hat <= target + 4.0 * est.std_error) {
      Estimate ensemble = estimate_random_grid_ensemble(period, subdivisions, k, samples, derive_seed(seed, 0xe5), options);
      return UpperBound{std::move(grid), est, ensemble, attempt + 1, coloring_seed};
    }
  }
  throw ResourceLimitError("no random grid realization reached 1/k within " + std::to_string(max_attempts) +
                           " attempts");
}

double table_bound_gap(const Rect& table) { return kTableKappa * inner_border_area(table, 1.0) / table.area(); }

int min_edges_non_k_colorable(const Estimate& p) {
  const double upper = p.p_hat + 4.0 * p.std_error;
  if (!(upper < 1.0)) {
    throw NoInformation("confidence edge p_hat + 4*stderr reaches 1; no edge count can be excluded");
  }
  if (!(upper > 0.0)) throw NoInformation("estimate is zero; every edge count is excluded");
  int m = 1;
  while (1.0 / m > upper) ++m;
  return m;
}

BoundsReport assemble_bounds(int k, double period, int subdivisions, std::int64_t samples, std::uint64_t seed,
                             const ParallelOptions& options) {
  return BoundsReport{k, lower_bound(k), upper_bound_construction(k, period, subdivisions, samples, seed, options)};
}

std::uint64_t evaluation_seed(std::uint64_t seed, double parameter) noexcept {
  return derive_seed(seed, std::bit_cast<std::uint64_t>(parameter));
}

OptimizationResult optimize_parameter(const ColoringFamily& family, double lo, double hi, int budget,
                                      std::int64_t samples, std::uint64_t seed, const ParallelOptions& options,
                                      int refinement_steps) {
  if (!(lo > 0.0) || !(hi > lo)) throw InvalidArgument("parameter range must satisfy 0 < lo < hi");
  if (budget < 3) throw InvalidArgument("sweep budget must be at least 3");

  OptimizationResult result;
  auto evaluate = [&](double parameter) {
    const ColoringPtr c = family(parameter);
    SweepPoint point{parameter, estimate_p_per(*c, samples, evaluation_seed(seed, parameter), options)};
    result.trace.push_back(point);
    if (result.trace.size() == 1 || point.estimate.p_hat < result.best_estimate.p_hat) {
      result.best_parameter = parameter;
      result.best_estimate = point.estimate;
    }
    return point.estimate.p_hat;
  };

  std::vector<double> grid(static_cast<std::size_t>(budget));
  const double ratio = hi / lo;
  for (int i = 0; i < budget; ++i) {
    grid[static_cast<std::size_t>(i)] = i == budget - 1 ? hi : lo * std::pow(ratio, static_cast<double>(i) / (budget - 1));
  }
  std::size_t best_index = 0;
  double best_value = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = evaluate(grid[i]);
    if (i == 0 || v < best_value) {
      best_value = v;
      best_index = i;
    }
  }
  result.coarse_points = budget;

  double a = grid[best_index == 0 ? 0 : best_index - 1];
  double b = grid[std::min(best_index + 1, grid.size() - 1)];
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = evaluate(x1);
  double f2 = evaluate(x2);
  for (int step = 0; step < refinement_steps; ++step) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = evaluate(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = evaluate(x2);
    }
  }
  return result;
}

OptimizationResult optimize_hex_edge(double s_min, double s_max, int budget, std::int64_t samples,
                                     std::uint64_t seed, const ParallelOptions& options) {
  return optimize_parameter([](double s) { return std::make_shared<Hex3Coloring>(s); }, s_min, s_max, budget, samples,
                            seed, options);
}

}  // namespace mononeedle
