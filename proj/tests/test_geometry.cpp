#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "mononeedle/geometry.hpp"
#include "oracles.hpp"

using namespace mononeedle;

TEST_CASE("reduce_to_cell examples") {
  const PeriodLattice square({1.0, 0.0}, {0.0, 1.0});
  CHECK(reduce_to_cell(square, {0.5, 0.75}) == Point2{0.5, 0.75});
  const Point2 r = reduce_to_cell(square, {2.5, -0.25});
  CHECK(r.x == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(r.y == doctest::Approx(0.75).epsilon(1e-15));

  const PeriodLattice skew({2.0, 0.0}, {1.0, 1.0});
  const Point2 z = reduce_to_cell(skew, {3.0, 1.0});
  CHECK(std::abs(z.x) < 1e-12);
  CHECK(std::abs(z.y) < 1e-12);
}

TEST_CASE("degenerate lattice is rejected") {
  CHECK_THROWS_AS(PeriodLattice({1.0, 0.0}, {2.0, 0.0}), InvalidLattice);
  CHECK_THROWS_AS(PeriodLattice({0.0, 0.0}, {0.0, 1.0}), InvalidLattice);
  CHECK_THROWS_AS(PeriodLattice({NAN, 0.0}, {0.0, 1.0}), InvalidLattice);
}

TEST_CASE("parallelogram_area") {
  CHECK(parallelogram_area(PeriodLattice({1.0, 0.0}, {0.0, 1.0})) == 1.0);
  CHECK(parallelogram_area(PeriodLattice({2.0, 0.0}, {1.0, 3.0})) == 6.0);
}

TEST_CASE("inner_border_area") {
  CHECK(inner_border_area(Rect(10.0), 1.0) == doctest::Approx(76.0));
  CHECK(inner_border_area(Rect(2.0), 1.0) == doctest::Approx(12.0));
  // Border at least half the side covers the whole square.
  CHECK(inner_border_area(Rect(2.0), 2.0) == doctest::Approx(16.0));
  CHECK(inner_border_area(Rect(2.0), 3.5) == doctest::Approx(16.0));
  CHECK_THROWS_AS(inner_border_area(Rect(2.0), 0.0), InvalidArgument);
  CHECK_THROWS_AS(inner_border_area(Rect(2.0), -1.0), InvalidArgument);
}

TEST_CASE("table must hold a needle") {
  CHECK_THROWS_AS(Rect(1.0), InvalidArgument);
  CHECK_THROWS_AS(Rect(0.5), InvalidArgument);
  CHECK_NOTHROW(Rect(1.0001));
}

TEST_CASE("reduce_to_cell properties") {
  RngStream rng(2024);
  const PeriodLattice lattices[] = {PeriodLattice({1.0, 0.0}, {0.0, 1.0}), PeriodLattice({2.0, 0.0}, {1.0, 1.0}),
                                    PeriodLattice({1.83, 0.0}, {0.915, 2.3775}),
                                    PeriodLattice({0.3, -0.7}, {1.1, 0.4})};
  for (const auto& lat : lattices) {
    for (int i = 0; i < 20000; ++i) {
      const Point2 p{40.0 * rng.uniform01() - 20.0, 40.0 * rng.uniform01() - 20.0};
      const Point2 r = lat.reduce(p);
      const Point2 ts = lat.coordinates(r);
      REQUIRE(ts.x >= 0.0);
      REQUIRE(ts.x < 1.0);
      REQUIRE(ts.y >= 0.0);
      REQUIRE(ts.y < 1.0);
      // Idempotent, exactly.
      REQUIRE(lat.reduce(r) == r);
      // Invariant under lattice translations up to 1e-9.
      const auto m = static_cast<double>(static_cast<int>(rng.below(2001)) - 1000);
      const auto n = static_cast<double>(static_cast<int>(rng.below(2001)) - 1000);
      const Point2 shifted = p + m * lat.u() + n * lat.v();
      const Point2 rs = lat.reduce(shifted);
      // Points within rounding of a cell edge may land on the opposite edge.
      const Point2 d = lat.coordinates(rs - r);
      const double dt = d.x - std::round(d.x);
      const double ds = d.y - std::round(d.y);
      REQUIRE(std::abs(dt) < 1e-9);
      REQUIRE(std::abs(ds) < 1e-9);
      if (std::abs(d.x) < 0.5 && std::abs(d.y) < 0.5) REQUIRE(norm(rs - r) < 1e-9);
    }
  }
}

TEST_CASE("sample_needle length, uniformity and determinism") {
  const PeriodLattice square({1.0, 0.0}, {0.0, 1.0});
  RngStream rng(7);
  constexpr int kN = 100000;
  double sx = 0.0, sy = 0.0;
  for (int i = 0; i < kN; ++i) {
    const Needle nd = sample_needle(square, rng);
    REQUIRE(std::abs(norm(nd.b - nd.a) - 1.0) <= 1e-12);
    REQUIRE(nd.theta >= 0.0);
    REQUIRE(nd.theta < 2.0 * std::numbers::pi);
    sx += nd.a.x;
    sy += nd.a.y;
  }
  const double stderr_uniform = std::sqrt(1.0 / 12.0 / kN);
  CHECK(std::abs(sx / kN - 0.5) < 5 * stderr_uniform);
  CHECK(std::abs(sy / kN - 0.5) < 5 * stderr_uniform);

  RngStream r1(42), r2(42);
  for (int i = 0; i < 100; ++i) {
    const Needle a = sample_needle(square, r1);
    const Needle b = sample_needle(square, r2);
    REQUIRE(a.a == b.a);
    REQUIRE(a.theta == b.theta);
    REQUIRE(a.b == b.b);
  }
}

TEST_CASE("needle angle passes a 36-bin chi-square test") {
  const PeriodLattice square({1.0, 0.0}, {0.0, 1.0});
  RngStream rng(99);
  std::vector<std::int64_t> bins(36, 0);
  for (int i = 0; i < 1'000'000; ++i) {
    const Needle nd = sample_needle(square, rng);
    ++bins[static_cast<std::size_t>(nd.theta / (2.0 * std::numbers::pi) * 36.0)];
  }
  CHECK(oracle::chi_square_uniform(bins) < oracle::chi_square_critical(36, 1e-6));
}

TEST_CASE("rng streams are reproducible and distinct") {
  RngStream a(1), b(1), c(2);
  for (int i = 0; i < 10; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    CHECK(x != c.next());
  }
  CHECK(derive_seed(5, 0) != derive_seed(5, 1));
  CHECK(derive_seed(5, 0) != derive_seed(6, 0));
  // xoshiro256** seeded through SplitMix64(42), computed by an independent reference implementation.
  RngStream frozen(42);
  CHECK(frozen.next() == 1546998764402558742ULL);
  CHECK(frozen.next() == 6990951692964543102ULL);
  CHECK(frozen.next() == 12544586762248559009ULL);
}
