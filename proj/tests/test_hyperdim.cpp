#include <cmath>
#include <numbers>

#include "doctest.h"
#include "mononeedle/hyperdim.hpp"
#include "mononeedle/io.hpp"
#include "oracles.hpp"

using namespace mononeedle;

namespace {
const double kStripe = std::numbers::sqrt3 / 2.0;

bool agree(const Estimate& a, const Estimate& b) { return std::abs(a.p_hat - b.p_hat) <= 4.0 * combined_stderr(a, b); }

// Gram–Schmidt/Householder without the sign fix; not Haar.
RotationD naive_rotation(int d, RngStream& rng) {
  Eigen::MatrixXd z(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) z(i, j) = rng.normal();
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(z);
  return qr.householderQ();
}
}  // namespace

TEST_CASE("sample_sphere") {
  RngStream rng(1);
  constexpr int kN = 1'000'000;
  Eigen::Vector3d sum = Eigen::Vector3d::Zero();
  for (int i = 0; i < kN; ++i) {
    const PointD v = sample_sphere(3, rng);
    REQUIRE(std::abs(v.norm() - 1.0) <= 1e-12);
    sum += v;
  }
  const double se = std::sqrt(1.0 / 3.0 / kN);
  for (int c = 0; c < 3; ++c) CHECK(std::abs(sum[c] / kN) < 5 * se);

  std::vector<std::int64_t> bins(36, 0);
  for (int i = 0; i < kN; ++i) {
    const PointD v = sample_sphere(2, rng);
    double a = std::atan2(v[1], v[0]);
    if (a < 0) a += 2 * std::numbers::pi;
    ++bins[std::min<std::size_t>(35, static_cast<std::size_t>(a / (2 * std::numbers::pi) * 36))];
  }
  CHECK(oracle::chi_square_uniform(bins) < oracle::chi_square_critical(36, 1e-6));
  CHECK_THROWS_AS(sample_sphere(1, rng), InvalidArgument);
}

TEST_CASE("sample_rotation is a proper rotation") {
  RngStream rng(2);
  for (int d = 2; d <= kMaxDimension; ++d) {
    for (int i = 0; i < 200; ++i) {
      const RotationD q = sample_rotation(d, rng);
      REQUIRE((q.transpose() * q - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff() <= 1e-12);
      REQUIRE(std::abs(q.determinant() - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("sample_rotation moves e1 uniformly over the sphere") {
  constexpr int kN = 200'000;
  RngStream rng(3);
  std::vector<double> rotated, sphere, naive;
  for (int i = 0; i < kN; ++i) {
    rotated.push_back(sample_rotation(3, rng)(0, 0));
    sphere.push_back(sample_sphere(3, rng)[0]);
    naive.push_back(naive_rotation(3, rng)(0, 0));
  }
  const double critical = oracle::ks_critical(1e-6, kN, kN);
  CHECK(oracle::ks_statistic(rotated, sphere) < critical);
  // Without the sign correction the first column is biased; the test must see it.
  CHECK(oracle::ks_statistic(naive, sphere) > critical);
}

TEST_CASE("sample_rotation is left-invariant") {
  constexpr int kN = 100'000;
  RngStream fixed_rng(4);
  RngStream rng(5);
  for (int trial = 0; trial < 3; ++trial) {
    const RotationD fixed = sample_rotation(3, fixed_rng);
    std::vector<double> plain, moved;
    for (int i = 0; i < kN; ++i) {
      plain.push_back(sample_rotation(3, rng)(0, 0));
      moved.push_back((fixed * sample_rotation(3, rng))(0, 0));
    }
    CHECK(oracle::ks_statistic(plain, moved) < oracle::ks_critical(1e-6, kN, kN));
  }
}

TEST_CASE("d = 2 rotation angles are uniform") {
  RngStream rng(6);
  std::vector<std::int64_t> bins(36, 0);
  for (int i = 0; i < 360'000; ++i) {
    const RotationD q = sample_rotation(2, rng);
    double a = std::atan2(q(1, 0), q(0, 0));
    if (a < 0) a += 2 * std::numbers::pi;
    ++bins[std::min<std::size_t>(35, static_cast<std::size_t>(a / (2 * std::numbers::pi) * 36))];
  }
  CHECK(oracle::chi_square_uniform(bins) < oracle::chi_square_critical(36, 1e-6));
}

TEST_CASE("estimate_p_per_d") {
  CHECK(estimate_p_per_d(SlabColoring(3, 10.0), 200'000, 1).p_hat > 0.9);
  CHECK(estimate_p_per_d(ConstantColoringD(3), 10'000, 1).p_hat == 1.0);

  const double expected = oracle::slab3_p_midpoint(kStripe);
  const Estimate e = estimate_p_per_d(SlabColoring(3, kStripe), 1'000'000, 2);
  CHECK(std::abs(e.p_hat - expected) <= 4.0 * e.std_error);

  CHECK_THROWS_AS(SlabColoring(3, 0.0), InvalidArgument);
  CHECK_THROWS_AS(SlabColoring(3, 1.0, 3), InvalidArgument);
  CHECK_THROWS_AS(SlabColoring(7, 1.0), InvalidArgument);
}

TEST_CASE("slab estimates do not depend on the slab axis") {
  const Estimate x = estimate_p_per_d(SlabColoring(3, 0.7, 0), 1'000'000, 7);
  const Estimate z = estimate_p_per_d(SlabColoring(3, 0.7, 2), 1'000'000, 8);
  CHECK(agree(x, z));
}

TEST_CASE("d = 2 slabs match planar stripes") {
  const Estimate slab = estimate_p_per_d(SlabColoring(2, kStripe, 1), 1'000'000, 9);
  const Estimate stripe = estimate_p_per(StripeColoring(kStripe), 1'000'000, 10);
  CHECK(agree(slab, stripe));
}

TEST_CASE("d-dimensional graph throwing") {
  const SlabColoring slab(3, kStripe);
  const Estimate needle = estimate_p_per_d(slab, 1'000'000, 11);
  const Estimate tetra = estimate_graph_throw_d(slab, regular_simplex(3), 1'000'000, 12);
  const Estimate segment = estimate_graph_throw_d(slab, unit_segment(3), 1'000'000, 13);
  CHECK(agree(needle, tetra));
  CHECK(agree(needle, segment));
  CHECK(estimate_graph_throw_d(ConstantColoringD(3), regular_simplex(3), 5000, 1).p_hat == 1.0);

  const EmbeddedGraphD long_edge(3, {PointD::Zero(3), 2.0 * PointD::Unit(3, 0)}, {{0, 1}});
  CHECK_THROWS_AS(estimate_graph_throw_d(slab, long_edge, 100, 1), InvalidArgument);
  CHECK_THROWS_AS(estimate_graph_throw_d(slab, regular_simplex(2), 100, 1), InvalidArgument);
}

TEST_CASE("regular simplex and its bound") {
  for (int k = 1; k <= kMaxDimension; ++k) {
    const EmbeddedGraphD s = regular_simplex(k);
    CHECK(s.num_vertices() == k + 1);
    CHECK(s.num_edges() == (k + 1) * k / 2);
    CHECK(verify_unit_embedding(s, 1e-12));
  }
  const EmbeddedGraphD tri = regular_simplex(2);
  CHECK(tri.dimension() == 2);
  CHECK(simplex_bound(3) == Rational(1, 6));
  CHECK(simplex_bound(2) == Rational(1, 3));
  CHECK(simplex_bound(5) == Rational(1, 15));
  for (int k = 2; k <= 4; ++k) {
    CHECK(solve_mk(regular_simplex(k), k).value == simplex_bound(k));
    CHECK(oracle::brute_force_min_mono(k + 1, regular_simplex(k).edges(), k) == 1);
  }
  CHECK_THROWS_AS(simplex_bound(0), InvalidArgument);
}

TEST_CASE("d-dimensional graph JSON") {
  const EmbeddedGraphD t = regular_simplex(3);
  const EmbeddedGraphD back = graph_d_from_json(to_json(t));
  CHECK(back.dimension() == 3);
  CHECK(back.edges() == t.edges());
  CHECK(verify_unit_embedding(back, 1e-12));
  CHECK_THROWS_AS(graph_d_from_json(Json::parse(R"({"vertices": [[0,0,0],[1,0]], "edges": [[0,1]]})")),
                  InvalidArgument);
}
