#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mononeedle/coloring.hpp"
#include "mononeedle/estimator.hpp"
#include "mononeedle/rational.hpp"

namespace mononeedle {

/// Constant in the finite-table correction |p^per − p^table| ≤ κ·A(K(P,1))/A(P).
inline constexpr double kTableKappa = 2.0;

struct LowerBound {
  Rational value;
  std::string witness;
  ColorAssignment witness_coloring;
};

/// max over the graph catalog of m_k(g); ties go to the earlier catalog entry.
LowerBound lower_bound(int k);

struct UpperBound {
  GridColoring coloring;
  /// p^per of the accepted realization.
  Estimate realization;
  /// E[p^per(C)] over the random construction.
  Estimate ensemble;
  int attempts = 0;
  std::uint64_t coloring_seed = 0;
};

/**
 * Random-grid construction: draws grid colorings (seeds derived from `seed`)
 * until one estimates at most 1/k + 4·stderr, and also estimates the
 * construction's mean. Gives up with ResourceLimitError after `max_attempts`.
 */
UpperBound upper_bound_construction(int k, double period, int subdivisions, std::int64_t samples, std::uint64_t seed,
                                    const ParallelOptions& options = {}, int max_attempts = 64);

/// κ·A(K(P,1))/A(P) for the square table.
double table_bound_gap(const Rect& table);

/// 4κ/R, the large-table envelope of table_bound_gap.
inline double table_gap_envelope(double half_width) { return 4.0 * kTableKappa / half_width; }

/**
 * Smallest edge count a non-k-colorable unit-distance graph can still have,
 * given an estimate p of some k-coloring's monochromatic probability.
 *
 * A non-k-colorable graph with m edges forces p ≥ m_k ≥ 1/m. With the
 * conservative edge p_hat + 4·stderr, every m with 1/m above it is excluded.
 * Throws NoInformation when that edge reaches 1 (or the estimate is zero).
 */
int min_edges_non_k_colorable(const Estimate& p);

struct BoundsReport {
  int k = 0;
  LowerBound lower;
  UpperBound upper;
};

BoundsReport assemble_bounds(int k, double period, int subdivisions, std::int64_t samples, std::uint64_t seed,
                             const ParallelOptions& options = {});

struct SweepPoint {
  double parameter = 0.0;
  Estimate estimate;
};

struct OptimizationResult {
  double best_parameter = 0.0;
  Estimate best_estimate;
  /// Coarse sweep followed by the refinement evaluations, in evaluation order.
  std::vector<SweepPoint> trace;
  int coarse_points = 0;
};

using ColoringFamily = std::function<ColoringPtr(double)>;

/// Deterministic per-evaluation seed from the run seed and the parameter's bit pattern.
std::uint64_t evaluation_seed(std::uint64_t seed, double parameter) noexcept;

/**
 * Minimizes p^per over a one-parameter coloring family: `budget` log-spaced
 * points on [lo, hi], then golden-section search on the bracket around the
 * best point. Each evaluation uses a fixed seed so the objective is a
 * deterministic function of the parameter.
 */
OptimizationResult optimize_parameter(const ColoringFamily& family, double lo, double hi, int budget,
                                      std::int64_t samples, std::uint64_t seed, const ParallelOptions& options = {},
                                      int refinement_steps = 12);

/// optimize_parameter over hexagonal 3-colorings by hexagon edge length.
OptimizationResult optimize_hex_edge(double s_min, double s_max, int budget, std::int64_t samples,
                                     std::uint64_t seed, const ParallelOptions& options = {});

}  // namespace mononeedle
