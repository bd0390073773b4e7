#include "mononeedle/geometry.hpp"

#include <string>

namespace mononeedle {

PeriodLattice::PeriodLattice(Vec2 u, Vec2 v) : u_(u), v_(v) {
  if (!is_finite(u) || !is_finite(v)) throw InvalidLattice("period vectors must be finite");
  const double det = cross(u, v);
  const double scale = norm(u) * norm(v);
  if (!(scale > 0.0) || std::abs(det) <= kDegenerateTolerance * scale) {
    throw InvalidLattice("degenerate period lattice: u and v are linearly dependent");
  }
  inv_det_ = 1.0 / det;
}

namespace {

bool in_unit_cell(Point2 ts) noexcept { return ts.x >= 0.0 && ts.x < 1.0 && ts.y >= 0.0 && ts.y < 1.0; }

double fractional(double x) noexcept {
  const double f = x - std::floor(x);
  // x - floor(x) rounds up to 1 for tiny negative x.
  return f >= 1.0 ? 0.0 : f;
}

}  // namespace

Point2 PeriodLattice::reduce(Point2 p) const noexcept {
  Point2 ts = coordinates(p);
  if (in_unit_cell(ts)) return p;
  // Reconstruction can round back across the cell boundary; re-reduce until
  // the representative is a fixed point so that reduce is idempotent.
  Point2 r = p;
  for (int pass = 0; pass < 4 && !in_unit_cell(ts); ++pass) {
    r = from_coordinates(fractional(ts.x), fractional(ts.y));
    ts = coordinates(r);
  }
  return r;
}

Rect::Rect(double half_width) : half_width_(half_width) {
  if (!(half_width > 1.0) || !std::isfinite(half_width)) {
    throw InvalidArgument("table half-width R must exceed 1 so a needle fits, got " +
                          std::to_string(half_width));
  }
}

Needle sample_needle(const PeriodLattice& lattice, RngStream& rng) noexcept {
  const double t = rng.uniform01();
  const double s = rng.uniform01();
  Needle n;
  n.a = lattice.from_coordinates(t, s);
  n.theta = rng.angle();
  n.b = n.a + unit(n.theta);
  return n;
}

double inner_border_area(const Rect& table, double r) {
  if (!(r > 0.0)) throw InvalidArgument("border width r must be positive");
  const double a = table.side();
  if (2.0 * r >= a) return a * a;
  const double inner = a - 2.0 * r;
  return a * a - inner * inner;
}

}  // namespace mononeedle
