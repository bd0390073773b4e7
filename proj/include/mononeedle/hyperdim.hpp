#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "mononeedle/estimator.hpp"
#include "mononeedle/graph.hpp"
#include "mononeedle/rational.hpp"
#include "mononeedle/rng.hpp"

namespace mononeedle {

using PointD = Eigen::VectorXd;
using RotationD = Eigen::MatrixXd;

inline constexpr int kMaxDimension = 6;

/// Periodic coloring of R^d whose period cell is an axis-aligned box.
class ColoringD {
 public:
  virtual ~ColoringD() = default;
  virtual int dimension() const noexcept = 0;
  virtual int num_colors() const noexcept = 0;
  virtual ColorIndex color_at(const PointD& p) const noexcept = 0;
  /// Side lengths of the period box [0, extent_0) × … × [0, extent_{d−1}).
  virtual PointD cell_extents() const = 0;
};

/**
 * Alternating slabs of width l orthogonal to one axis: color ⌊x_axis / l⌋ mod 2.
 * The period cell is 2l along the slab axis and 1 along every other axis.
 */
class SlabColoring final : public ColoringD {
 public:
  SlabColoring(int dimension, double width, int axis = 0);

  double width() const noexcept { return width_; }
  int axis() const noexcept { return axis_; }
  int dimension() const noexcept override { return dimension_; }
  int num_colors() const noexcept override { return 2; }
  ColorIndex color_at(const PointD& p) const noexcept override;
  PointD cell_extents() const override;

 private:
  int dimension_;
  double width_;
  int axis_;
};

class ConstantColoringD final : public ColoringD {
 public:
  explicit ConstantColoringD(int dimension);

  int dimension() const noexcept override { return dimension_; }
  int num_colors() const noexcept override { return 1; }
  ColorIndex color_at(const PointD&) const noexcept override { return 0; }
  PointD cell_extents() const override { return PointD::Ones(dimension_); }

 private:
  int dimension_;
};

class EmbeddedGraphD {
 public:
  EmbeddedGraphD(int dimension, std::vector<PointD> vertices, std::vector<Edge> edges);

  int dimension() const noexcept { return dimension_; }
  int num_vertices() const noexcept { return static_cast<int>(vertices_.size()); }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<PointD>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

 private:
  int dimension_;
  std::vector<PointD> vertices_;
  std::vector<Edge> edges_;
};

bool verify_unit_embedding(const EmbeddedGraphD& g, double tol = 1e-9);
MkResult solve_mk(const EmbeddedGraphD& g, int k, const SolveOptions& options = {});

/// Uniform point on S^{d−1}: normalized vector of d standard normals.
PointD sample_sphere(int d, RngStream& rng);

/**
 * Haar-distributed rotation in SO(d): QR of a Gaussian matrix with Q's columns
 * rescaled by sign(diag R), then one column negated if det Q = −1.
 */
RotationD sample_rotation(int d, RngStream& rng);

/// Base point uniform in the period box, far end at a uniform sphere offset.
Estimate estimate_p_per_d(const ColoringD& c, std::int64_t n, std::uint64_t seed, const ParallelOptions& options = {});

/// Throws g with a uniform translation in the period box and a Haar rotation, then picks a uniform edge.
Estimate estimate_graph_throw_d(const ColoringD& c, const EmbeddedGraphD& g, std::int64_t n, std::uint64_t seed,
                                const ParallelOptions& options = {});

/// K_{k+1} with unit edges in R^k.
EmbeddedGraphD regular_simplex(int k);

/// A single unit edge in R^d.
EmbeddedGraphD unit_segment(int d);

/// 1 / C(k+1, 2) = m_k(K_{k+1}); checked against the exact solver for k ≤ 6.
Rational simplex_bound(int k);

}  // namespace mononeedle
