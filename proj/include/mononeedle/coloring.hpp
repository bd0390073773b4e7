#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mononeedle/geometry.hpp"
#include "mononeedle/rng.hpp"

namespace mononeedle {

/// Color index in [0, k).
using ColorIndex = int;

/**
 * A periodic k-coloring of the plane.
 *
 * Implementations are immutable after construction, so color_at may be called
 * concurrently. color_at(p) == color_at(lattice().reduce(p)) up to
 * measure-zero boundaries.
 */
class Coloring {
 public:
  virtual ~Coloring() = default;

  virtual int num_colors() const noexcept = 0;
  virtual ColorIndex color_at(Point2 p) const noexcept = 0;
  virtual const PeriodLattice& lattice() const noexcept = 0;
  /// Short descriptor in the CLI mini-language where one exists.
  virtual std::string describe() const = 0;
};

using ColoringPtr = std::shared_ptr<const Coloring>;

/// Single-color plane (k = 1); every needle is monochromatic.
class ConstantColoring final : public Coloring {
 public:
  ConstantColoring() : lattice_({1.0, 0.0}, {0.0, 1.0}) {}

  int num_colors() const noexcept override { return 1; }
  ColorIndex color_at(Point2) const noexcept override { return 0; }
  const PeriodLattice& lattice() const noexcept override { return lattice_; }
  std::string describe() const override { return "constant"; }

 private:
  PeriodLattice lattice_;
};

/// Horizontal stripes of width l: stripe j covers y ∈ [j·l, (j+1)·l) and has color j mod 2.
class StripeColoring final : public Coloring {
 public:
  explicit StripeColoring(double width);

  double width() const noexcept { return width_; }
  int num_colors() const noexcept override { return 2; }
  ColorIndex color_at(Point2 p) const noexcept override;
  const PeriodLattice& lattice() const noexcept override { return lattice_; }
  std::string describe() const override;

 private:
  double width_;
  PeriodLattice lattice_;
};

/**
 * Proper 3-coloring of the regular tiling by flat-top hexagons of side s.
 *
 * Hexagon (q, r) is centered at q·a1 + r·a2 with a1 = (3s/2, √3s/2),
 * a2 = (0, √3s) and has color (q − r) mod 3. Points go to the nearest center;
 * exact ties go to the lexicographically smallest center (x, then y). The
 * color pattern is periodic under u = (3s, 0) and v = (3s/2, 3√3s/2).
 */
class Hex3Coloring final : public Coloring {
 public:
  struct HexIndex {
    std::int64_t q = 0;
    std::int64_t r = 0;
    friend bool operator==(HexIndex, HexIndex) = default;
  };

  explicit Hex3Coloring(double edge);

  double edge() const noexcept { return edge_; }
  int num_colors() const noexcept override { return 3; }
  ColorIndex color_at(Point2 p) const noexcept override;
  const PeriodLattice& lattice() const noexcept override { return lattice_; }
  std::string describe() const override;

  HexIndex locate(Point2 p) const noexcept;
  Point2 center(HexIndex h) const noexcept;
  static ColorIndex color_of(HexIndex h) noexcept;
  /// The six edge-adjacent hexagons.
  static std::vector<HexIndex> neighbors(HexIndex h);

 private:
  double edge_;
  PeriodLattice lattice_;
};

/// n×n grid of colored squares of side R/n repeated with period (R,0), (0,R).
class GridColoring final : public Coloring {
 public:
  /// `cells` is row-major: cells[iy * n + ix] colors [ix·R/n, (ix+1)·R/n) × [iy·R/n, (iy+1)·R/n).
  GridColoring(double period, int subdivisions, int k, std::vector<ColorIndex> cells);

  double period() const noexcept { return period_; }
  int subdivisions() const noexcept { return n_; }
  double cell_side() const noexcept { return period_ / n_; }
  const std::vector<ColorIndex>& cells() const noexcept { return cells_; }
  int num_colors() const noexcept override { return k_; }
  ColorIndex color_at(Point2 p) const noexcept override;
  const PeriodLattice& lattice() const noexcept override { return lattice_; }
  std::string describe() const override;

  void set_descriptor(std::string d) { descriptor_ = std::move(d); }

 private:
  double period_;
  int n_;
  int k_;
  std::vector<ColorIndex> cells_;
  PeriodLattice lattice_;
  std::string descriptor_;
};

/// R/n below which any unit needle has its endpoints in distinct grid cells.
inline constexpr double kMaxRandomGridCell = 0.70710678118654752440;  // 1/√2

/// Grid whose n² cells get i.i.d. uniform colors in [0, k); requires R > 2 and R/n < 1/√2.
GridColoring make_random_grid(double period, int subdivisions, int k, RngStream& rng);

/// Seeded variant; the descriptor records the seed so the coloring can be rebuilt.
GridColoring make_random_grid(double period, int subdivisions, int k, std::uint64_t seed);

struct Tile {
  std::vector<Point2> polygon;
  ColorIndex color = 0;
};

/**
 * User-defined periodic coloring: simple polygons that partition the
 * fundamental parallelogram up to measure zero.
 */
class PolygonalColoring final : public Coloring {
 public:
  /// Relative tolerance on total tile area vs. cell area.
  static constexpr double kCoverageTolerance = 1e-6;

  PolygonalColoring(PeriodLattice lattice, int k, std::vector<Tile> tiles);

  const std::vector<Tile>& tiles() const noexcept { return tiles_; }
  int num_colors() const noexcept override { return k_; }
  ColorIndex color_at(Point2 p) const noexcept override;
  const PeriodLattice& lattice() const noexcept override { return lattice_; }
  std::string describe() const override { return "polygonal"; }

 private:
  PeriodLattice lattice_;
  int k_;
  std::vector<Tile> tiles_;
};

double polygon_signed_area(const std::vector<Point2>& polygon) noexcept;
/// Crossing-number test with half-open edges.
bool point_in_polygon(const std::vector<Point2>& polygon, Point2 p) noexcept;

struct PeriodicityReport {
  std::int64_t samples = 0;
  std::int64_t violations_u = 0;
  std::int64_t violations_v = 0;
  std::int64_t violations_uv = 0;

  std::int64_t violations() const noexcept { return violations_u + violations_v + violations_uv; }
};

/// Compares c(p) with c(p+u), c(p+v), c(p+u+v) at random points p.
PeriodicityReport verify_periodicity(const Coloring& c, std::int64_t samples, RngStream& rng);

/**
 * Builds a coloring from the CLI mini-language: `constant`, `stripe:<width>`,
 * `hex3:<edge>`, `grid:<R>:<n>:<k>:<seed>` or `file:<path>`.
 */
ColoringPtr parse_coloring(const std::string& spec);

/// Names accepted by parse_coloring, for help and error text.
std::vector<std::string> coloring_kinds();

}  // namespace mononeedle
