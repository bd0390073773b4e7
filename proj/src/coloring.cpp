#include "mononeedle/coloring.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "mononeedle/io.hpp"

namespace mononeedle {

namespace {

ColorIndex positive_mod(std::int64_t a, std::int64_t m) noexcept {
  const std::int64_t r = a % m;
  return static_cast<ColorIndex>(r < 0 ? r + m : r);
}

std::string format_real(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

double parse_real(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw InvalidArgument("cannot parse " + what + " from '" + text + "'");
  }
}

template <typename Int>
Int parse_integer(const std::string& text, const std::string& what) {
  Int v{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InvalidArgument("cannot parse " + what + " from '" + text + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Stripes

StripeColoring::StripeColoring(double width)
    : width_(width),
      lattice_({1.0, 0.0}, {0.0, 2.0 * (width > 0.0 && std::isfinite(width) ? width : 1.0)}) {
  if (!(width > 0.0) || !std::isfinite(width)) throw InvalidArgument("stripe width must be positive");
}

ColorIndex StripeColoring::color_at(Point2 p) const noexcept {
  // Lower side closed, upper side open.
  const auto j = static_cast<std::int64_t>(std::floor(p.y / width_));
  return positive_mod(j, 2);
}

std::string StripeColoring::describe() const { return "stripe:" + format_real(width_); }

// ---------------------------------------------------------------------------
// Hexagons

namespace {
constexpr double kSqrt3 = std::numbers::sqrt3;

PeriodLattice hex3_lattice(double s) {
  return PeriodLattice({3.0 * s, 0.0}, {1.5 * s, 1.5 * kSqrt3 * s});
}
}  // namespace

Hex3Coloring::Hex3Coloring(double edge)
    : edge_(edge), lattice_(hex3_lattice(edge > 0.0 && std::isfinite(edge) ? edge : 1.0)) {
  if (!(edge > 0.0) || !std::isfinite(edge)) throw InvalidArgument("hexagon edge must be positive");
}

Point2 Hex3Coloring::center(HexIndex h) const noexcept {
  const auto q = static_cast<double>(h.q);
  const auto r = static_cast<double>(h.r);
  return {1.5 * edge_ * q, 0.5 * kSqrt3 * edge_ * q + kSqrt3 * edge_ * r};
}

Hex3Coloring::HexIndex Hex3Coloring::locate(Point2 p) const noexcept {
  // Centers form a triangular lattice; the rhombus spanned by a1, a2 at the
  // floored coordinates contains p, and the nearest center is one of its
  // four corners.
  const double qf = p.x / (1.5 * edge_);
  const double rf = (p.y - 0.5 * kSqrt3 * edge_ * qf) / (kSqrt3 * edge_);
  const auto q0 = static_cast<std::int64_t>(std::floor(qf));
  const auto r0 = static_cast<std::int64_t>(std::floor(rf));

  HexIndex best{q0, r0};
  Point2 best_center = center(best);
  double best_d2 = std::numeric_limits<double>::infinity();
  for (std::int64_t dq = 0; dq <= 1; ++dq) {
    for (std::int64_t dr = 0; dr <= 1; ++dr) {
      const HexIndex h{q0 + dq, r0 + dr};
      const Point2 c = center(h);
      const Point2 d = p - c;
      const double d2 = dot(d, d);
      const bool closer = d2 < best_d2;
      const bool tie_smaller =
          d2 == best_d2 && (c.x < best_center.x || (c.x == best_center.x && c.y < best_center.y));
      if (closer || tie_smaller) {
        best = h;
        best_center = c;
        best_d2 = d2;
      }
    }
  }
  return best;
}

ColorIndex Hex3Coloring::color_of(HexIndex h) noexcept { return positive_mod(h.q - h.r, 3); }

std::vector<Hex3Coloring::HexIndex> Hex3Coloring::neighbors(HexIndex h) {
  return {{h.q + 1, h.r}, {h.q - 1, h.r},     {h.q, h.r + 1},
          {h.q, h.r - 1}, {h.q + 1, h.r - 1}, {h.q - 1, h.r + 1}};
}

ColorIndex Hex3Coloring::color_at(Point2 p) const noexcept { return color_of(locate(p)); }

std::string Hex3Coloring::describe() const { return "hex3:" + format_real(edge_); }

// ---------------------------------------------------------------------------
// Grids

GridColoring::GridColoring(double period, int subdivisions, int k, std::vector<ColorIndex> cells)
    : period_(period),
      n_(subdivisions),
      k_(k),
      cells_(std::move(cells)),
      lattice_({period > 0.0 ? period : 1.0, 0.0}, {0.0, period > 0.0 ? period : 1.0}) {
  if (!(period > 0.0) || !std::isfinite(period)) throw InvalidConstruction("grid period R must be positive");
  if (subdivisions < 1) throw InvalidConstruction("grid subdivisions n must be at least 1");
  if (k < 1) throw InvalidConstruction("number of colors k must be at least 1");
  const auto expected = static_cast<std::size_t>(subdivisions) * static_cast<std::size_t>(subdivisions);
  if (cells_.size() != expected) {
    throw InvalidConstruction("grid needs n*n = " + std::to_string(expected) + " cells, got " +
                              std::to_string(cells_.size()));
  }
  for (ColorIndex c : cells_) {
    if (c < 0 || c >= k) throw InvalidConstruction("grid cell color out of range [0, k)");
  }
}

ColorIndex GridColoring::color_at(Point2 p) const noexcept {
  auto cell = [this](double coord) {
    double f = coord / period_;
    f -= std::floor(f);
    const auto i = static_cast<int>(f * n_);
    return std::clamp(i, 0, n_ - 1);
  };
  return cells_[static_cast<std::size_t>(cell(p.y)) * static_cast<std::size_t>(n_) +
                static_cast<std::size_t>(cell(p.x))];
}

std::string GridColoring::describe() const {
  if (!descriptor_.empty()) return descriptor_;
  return "grid:" + format_real(period_) + ":" + std::to_string(n_) + ":" + std::to_string(k_);
}

GridColoring make_random_grid(double period, int subdivisions, int k, RngStream& rng) {
  if (!(period > 2.0)) throw InvalidConstruction("random grid requires R > 2");
  if (subdivisions < 1) throw InvalidConstruction("random grid requires n >= 1");
  if (!(period / subdivisions < kMaxRandomGridCell)) {
    throw InvalidConstruction("random grid requires cell side R/n < 1/sqrt(2), got " +
                              format_real(period / subdivisions));
  }
  if (k < 1) throw InvalidConstruction("random grid requires k >= 1");
  std::vector<ColorIndex> cells(static_cast<std::size_t>(subdivisions) * static_cast<std::size_t>(subdivisions));
  for (auto& c : cells) c = static_cast<ColorIndex>(rng.below(static_cast<std::uint64_t>(k)));
  return GridColoring(period, subdivisions, k, std::move(cells));
}

GridColoring make_random_grid(double period, int subdivisions, int k, std::uint64_t seed) {
  RngStream rng(seed);
  GridColoring g = make_random_grid(period, subdivisions, k, rng);
  g.set_descriptor("grid:" + format_real(period) + ":" + std::to_string(subdivisions) + ":" +
                   std::to_string(k) + ":" + std::to_string(seed));
  return g;
}

// ---------------------------------------------------------------------------
// Polygons

double polygon_signed_area(const std::vector<Point2>& polygon) noexcept {
  double twice = 0.0;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) twice += cross(polygon[i], polygon[(i + 1) % n]);
  return 0.5 * twice;
}

bool point_in_polygon(const std::vector<Point2>& polygon, Point2 p) noexcept {
  bool inside = false;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2 a = polygon[i];
    const Point2 b = polygon[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

namespace {

double segment_distance2(Point2 p, Point2 a, Point2 b) noexcept {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const Point2 d = p - (a + t * ab);
  return dot(d, d);
}

double polygon_distance2(const std::vector<Point2>& polygon, Point2 p) noexcept {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    best = std::min(best, segment_distance2(p, polygon[i], polygon[(i + 1) % polygon.size()]));
  }
  return best;
}

}  // namespace

PolygonalColoring::PolygonalColoring(PeriodLattice lattice, int k, std::vector<Tile> tiles)
    : lattice_(lattice), k_(k), tiles_(std::move(tiles)) {
  if (k < 1) throw InvalidConstruction("number of colors k must be at least 1");
  if (tiles_.empty()) throw InvalidConstruction("polygonal coloring needs at least one tile");
  constexpr double kSlack = 1e-9;
  double total = 0.0;
  for (const auto& tile : tiles_) {
    if (tile.polygon.size() < 3) throw InvalidConstruction("tile polygon needs at least 3 vertices");
    if (tile.color < 0 || tile.color >= k) throw InvalidConstruction("tile color out of range [0, k)");
    for (Point2 v : tile.polygon) {
      if (!is_finite(v)) throw InvalidConstruction("tile vertex is not finite");
      const Point2 ts = lattice_.coordinates(v);
      if (ts.x < -kSlack || ts.x > 1.0 + kSlack || ts.y < -kSlack || ts.y > 1.0 + kSlack) {
        throw InvalidConstruction("tile vertex lies outside the fundamental parallelogram");
      }
    }
    total += std::abs(polygon_signed_area(tile.polygon));
  }
  const double cell = lattice_.area();
  if (std::abs(total - cell) > kCoverageTolerance * cell) {
    throw InvalidConstruction("tiles cover area " + format_real(total) + " but the cell has area " +
                              format_real(cell));
  }
  // Equal total area plus no overlap at probe points rules out gap/overlap pairs
  // above the probe resolution.
  constexpr int kProbe = 64;
  for (int i = 0; i < kProbe; ++i) {
    for (int j = 0; j < kProbe; ++j) {
      const Point2 p = lattice_.from_coordinates((i + 0.5) / kProbe, (j + 0.5) / kProbe);
      int hits = 0;
      for (const auto& tile : tiles_) hits += point_in_polygon(tile.polygon, p) ? 1 : 0;
      if (hits > 1) throw InvalidConstruction("tiles overlap with positive area");
    }
  }
}

ColorIndex PolygonalColoring::color_at(Point2 p) const noexcept {
  const Point2 q = lattice_.reduce(p);
  for (const auto& tile : tiles_) {
    if (point_in_polygon(tile.polygon, q)) return tile.color;
  }
  // Untiled sliver or cell boundary: nearest tile wins.
  const Tile* nearest = &tiles_.front();
  double best = std::numeric_limits<double>::infinity();
  for (const auto& tile : tiles_) {
    const double d2 = polygon_distance2(tile.polygon, q);
    if (d2 < best) {
      best = d2;
      nearest = &tile;
    }
  }
  return nearest->color;
}

// ---------------------------------------------------------------------------

PeriodicityReport verify_periodicity(const Coloring& c, std::int64_t samples, RngStream& rng) {
  const PeriodLattice& lat = c.lattice();
  const Vec2 u = lat.u();
  const Vec2 v = lat.v();
  PeriodicityReport report;
  report.samples = samples;
  for (std::int64_t i = 0; i < samples; ++i) {
    // Points spread over a 10×10 block of cells around the origin.
    const double t = 10.0 * rng.uniform01() - 5.0;
    const double s = 10.0 * rng.uniform01() - 5.0;
    const Point2 p = lat.from_coordinates(t, s);
    const ColorIndex base = c.color_at(p);
    if (c.color_at(p + u) != base) ++report.violations_u;
    if (c.color_at(p + v) != base) ++report.violations_v;
    if (c.color_at(p + u + v) != base) ++report.violations_uv;
  }
  return report;
}

std::vector<std::string> coloring_kinds() {
  return {"constant", "stripe:<width>", "hex3:<edge>", "grid:<R>:<n>:<k>:<seed>", "file:<path>"};
}

ColoringPtr parse_coloring(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? std::string{} : spec.substr(colon + 1);
  auto require_args = [&](bool ok) {
    if (!ok) throw InvalidArgument("malformed coloring '" + spec + "'");
  };

  if (kind == "constant") {
    require_args(colon == std::string::npos);
    return std::make_shared<ConstantColoring>();
  }
  if (kind == "stripe") {
    require_args(!rest.empty());
    return std::make_shared<StripeColoring>(parse_real(rest, "stripe width"));
  }
  if (kind == "hex3") {
    require_args(!rest.empty());
    return std::make_shared<Hex3Coloring>(parse_real(rest, "hexagon edge"));
  }
  if (kind == "grid") {
    const auto parts = split(rest, ':');
    require_args(parts.size() == 4);
    return std::make_shared<GridColoring>(make_random_grid(
        parse_real(parts[0], "grid period"), parse_integer<int>(parts[1], "grid subdivisions"),
        parse_integer<int>(parts[2], "color count"), parse_integer<std::uint64_t>(parts[3], "grid seed")));
  }
  if (kind == "file") {
    require_args(!rest.empty());
    return load_coloring_file(rest);
  }
  std::string names;
  for (const auto& k : coloring_kinds()) names += (names.empty() ? "" : ", ") + k;
  throw InvalidArgument("unknown coloring '" + spec + "'; available: " + names);
}

}  // namespace mononeedle
