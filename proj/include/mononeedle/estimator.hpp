#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mononeedle/coloring.hpp"
#include "mononeedle/geometry.hpp"
#include "mononeedle/graph.hpp"
#include "mononeedle/parallel.hpp"

namespace mononeedle {

enum class Process { needle, graph_throw, table, random_grid };

std::string to_string(Process p);

/// Monte Carlo estimate of a monochromatic-needle probability.
struct Estimate {
  double p_hat = 0.0;
  std::int64_t n = 0;
  std::int64_t successes = 0;
  /// sqrt(p_hat (1 − p_hat) / n).
  double std_error = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  std::uint64_t seed = 0;
  Process process = Process::needle;
  /// Total needle draws; exceeds n only for the conditioned table process.
  std::int64_t draws = 0;

  double acceptance_rate() const noexcept { return draws > 0 ? static_cast<double>(n) / draws : 0.0; }
};

/// Normal-approximation 95% interval, clipped to [0, 1].
Estimate make_estimate(std::int64_t successes, std::int64_t n, std::uint64_t seed, Process process,
                       std::int64_t draws = 0);

/// √(a.se² + b.se²), the standard error of a difference of independent estimates.
double combined_stderr(const Estimate& a, const Estimate& b) noexcept;

/// Base point uniform in the fundamental cell, direction uniform; the far end is
/// colored through periodicity.
Estimate estimate_p_per(const Coloring& c, std::int64_t n, std::uint64_t seed, const ParallelOptions& options = {});

/**
 * Throws the unit-distance graph g: uniform translation A0 in the cell, uniform
 * rotation θ, uniform edge J. The needle is (e^{iθ} z_J + A0, e^{iθ}(z_J + e^{iθ_J}) + A0).
 */
Estimate estimate_via_graph_throw(const Coloring& c, const EmbeddedGraph& g, std::int64_t n, std::uint64_t seed,
                                  const ParallelOptions& options = {});

/// Needles on the table [-R, R]² conditioned on both ends landing on it (rejection sampling).
/// `n` counts accepted needles; Estimate::draws reports the total thrown.
Estimate estimate_p_table(const Coloring& c, const Rect& table, std::int64_t n, std::uint64_t seed,
                          const ParallelOptions& options = {});

/**
 * Monochromatic probability averaged over both the needle and a fresh random
 * grid coloring (R, cells, k) per needle, i.e. E[p^per(C)] for the random grid.
 */
Estimate estimate_random_grid_ensemble(double period, int subdivisions, int k, std::int64_t n, std::uint64_t seed,
                                       const ParallelOptions& options = {});

/// Different-color probability at vertical offset δ for alternating stripes of width l.
double stripe_difference_probability(double offset, double width) noexcept;

/// p^per of the stripe coloring of width l by adaptive quadrature over the needle angle.
double exact_stripe_p(double width);

/// Empirical Pr(c(A) = c1, c(B) = c2) over needles, row-major k×k.
struct JointDistribution {
  int k = 0;
  std::int64_t n = 0;
  std::vector<std::int64_t> counts;
  std::vector<double> probabilities;

  double at(int c1, int c2) const { return probabilities.at(static_cast<std::size_t>(c1 * k + c2)); }
  double diagonal_sum() const;
};

JointDistribution joint_distribution(const Coloring& c, std::int64_t n, std::uint64_t seed,
                                     const ParallelOptions& options = {});

}  // namespace mononeedle
