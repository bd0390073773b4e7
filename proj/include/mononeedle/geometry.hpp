#pragma once

#include <cmath>

#include "mononeedle/errors.hpp"
#include "mononeedle/rng.hpp"

namespace mononeedle {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 a, Point2 b) noexcept { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) noexcept { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator*(double s, Point2 a) noexcept { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Point2, Point2) = default;
};

using Vec2 = Point2;

inline double norm(Vec2 v) noexcept { return std::hypot(v.x, v.y); }
constexpr double cross(Vec2 a, Vec2 b) noexcept { return a.x * b.y - a.y * b.x; }
constexpr double dot(Vec2 a, Vec2 b) noexcept { return a.x * b.x + a.y * b.y; }
inline bool is_finite(Point2 p) noexcept { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Counter-clockwise rotation of `v` by the angle whose cosine/sine are given.
constexpr Vec2 rotate(Vec2 v, double cos_t, double sin_t) noexcept {
  return {cos_t * v.x - sin_t * v.y, sin_t * v.x + cos_t * v.y};
}

/// Unit vector e^{iθ}.
inline Vec2 unit(double theta) noexcept { return {std::cos(theta), std::sin(theta)}; }

/**
 * Two independent period vectors and their fundamental parallelogram
 * {t·u + s·v : 0 ≤ t, s < 1}.
 */
class PeriodLattice {
 public:
  /// Relative tolerance on |u×v| / (|u||v|) below which the lattice is degenerate.
  static constexpr double kDegenerateTolerance = 1e-12;

  PeriodLattice(Vec2 u, Vec2 v);

  Vec2 u() const noexcept { return u_; }
  Vec2 v() const noexcept { return v_; }

  /// Lattice coordinates (t, s) with p = t·u + s·v.
  Point2 coordinates(Point2 p) const noexcept {
    return {(p.x * v_.y - p.y * v_.x) * inv_det_, (u_.x * p.y - u_.y * p.x) * inv_det_};
  }

  Point2 from_coordinates(double t, double s) const noexcept {
    return {t * u_.x + s * v_.x, t * u_.y + s * v_.y};
  }

  /// Representative of `p` in the half-open fundamental parallelogram.
  Point2 reduce(Point2 p) const noexcept;

  double area() const noexcept { return std::abs(cross(u_, v_)); }

 private:
  Vec2 u_;
  Vec2 v_;
  double inv_det_;
};

inline Point2 reduce_to_cell(const PeriodLattice& lattice, Point2 p) noexcept { return lattice.reduce(p); }
inline double parallelogram_area(const PeriodLattice& lattice) noexcept { return lattice.area(); }

/// Square table [-R, R]².
class Rect {
 public:
  explicit Rect(double half_width);

  double half_width() const noexcept { return half_width_; }
  double side() const noexcept { return 2.0 * half_width_; }
  double area() const noexcept { return side() * side(); }

  /// Open square: a needle endpoint on the boundary is not on the table.
  bool contains(Point2 p) const noexcept {
    return std::abs(p.x) < half_width_ && std::abs(p.y) < half_width_;
  }

 private:
  double half_width_;
};

struct Needle {
  Point2 a;
  double theta = 0.0;
  Point2 b;
};

/// A uniform in the fundamental parallelogram, θ uniform in [0, 2π), b = a + e^{iθ}.
Needle sample_needle(const PeriodLattice& lattice, RngStream& rng) noexcept;

/// Area of the r-wide inner border {z ∈ P : d(z, Pᶜ) < r} of the square table.
double inner_border_area(const Rect& table, double r);

}  // namespace mononeedle
