#include <cmath>
#include <numbers>

#include "doctest.h"
#include "mononeedle/bounds.hpp"
#include "mononeedle/io.hpp"

using namespace mononeedle;

namespace {
Estimate tight(double p) {
  Estimate e = make_estimate(0, 1, 0, Process::needle);
  e.p_hat = p;
  e.std_error = 1e-6;
  return e;
}
}  // namespace

TEST_CASE("lower_bound over the catalog") {
  const LowerBound k2 = lower_bound(2);
  CHECK(k2.value == Rational(1, 3));
  CHECK(k2.witness == "triangle");
  const LowerBound k3 = lower_bound(3);
  CHECK(k3.value == Rational(1, 11));
  CHECK(k3.witness == "moser_spindle");
  const LowerBound k4 = lower_bound(4);
  CHECK(k4.value == Rational(0, 1));
  CHECK(k4.witness == "triangle");
  CHECK_THROWS_AS(lower_bound(0), InvalidArgument);
}

TEST_CASE("upper_bound_construction") {
  for (int k : {2, 3}) {
    const UpperBound ub = upper_bound_construction(k, 8.0, 16, 1'000'000, 17);
    CHECK(ub.realization.p_hat <= 1.0 / k + 4.0 * ub.realization.std_error);
    CHECK(std::abs(ub.ensemble.p_hat - 1.0 / k) <= 4.0 * ub.ensemble.std_error);
    CHECK(ub.coloring.num_colors() == k);
    CHECK(ub.attempts >= 1);
    // The accepted coloring can be rebuilt from its descriptor.
    const auto rebuilt = parse_coloring(ub.coloring.describe());
    CHECK(dynamic_cast<const GridColoring&>(*rebuilt).cells() == ub.coloring.cells());
  }
  const UpperBound one = upper_bound_construction(1, 8.0, 16, 10'000, 1);
  CHECK(one.realization.p_hat == 1.0);
  CHECK(one.attempts == 1);
  CHECK_THROWS_AS(upper_bound_construction(2, 8.0, 4, 1000, 1), InvalidConstruction);
}

TEST_CASE("lower and upper bounds sandwich") {
  for (int k : {2, 3}) {
    const BoundsReport r = assemble_bounds(k, 8.0, 16, 500'000, 5);
    CHECK(r.lower.value.value() <= r.upper.realization.p_hat + 4.0 * r.upper.realization.std_error);
    const Json j = to_json(r);
    CHECK(j["consistent"].get<bool>());
    CHECK(j["lower"]["value"] == r.lower.value.str());
  }
}

TEST_CASE("table_bound_gap") {
  CHECK(table_bound_gap(Rect(10.0)) == doctest::Approx(0.38));
  CHECK(table_bound_gap(Rect(100.0)) == doctest::Approx(0.0398));
  double previous = 2.0;
  for (double R : {2.0, 10.0, 100.0, 1000.0}) {
    const double gap = table_bound_gap(Rect(R));
    CHECK(gap < previous);
    CHECK(gap <= table_gap_envelope(R));
    previous = gap;
  }
  CHECK(table_bound_gap(Rect(1000.0)) < 0.01);
  CHECK(table_gap_envelope(10.0) == doctest::Approx(0.8));
}

TEST_CASE("min_edges_non_k_colorable") {
  CHECK(min_edges_non_k_colorable(tight(0.13)) == 8);
  CHECK(min_edges_non_k_colorable(tight(0.3)) == 4);
  Estimate half = tight(0.5);
  half.std_error = 0.0;
  CHECK(min_edges_non_k_colorable(half) == 2);
  // The conservative edge matters: 0.124 + 4·0.0003 crosses 1/8.
  Estimate noisy = tight(0.124);
  noisy.std_error = 3e-4;
  CHECK(min_edges_non_k_colorable(noisy) == 8);
  noisy.std_error = 1e-5;
  CHECK(min_edges_non_k_colorable(noisy) == 9);

  Estimate wide = tight(0.9);
  wide.std_error = 0.05;
  CHECK_THROWS_AS(min_edges_non_k_colorable(wide), NoInformation);
  CHECK_THROWS_AS(min_edges_non_k_colorable(make_estimate(5, 5, 0, Process::needle)), NoInformation);
}

TEST_CASE("optimize_parameter on a constant objective") {
  const auto constant = [](double) -> ColoringPtr { return std::make_shared<ConstantColoring>(); };
  const OptimizationResult r = optimize_parameter(constant, 0.3, 1.2, 5, 1000, 3, {}, 4);
  CHECK(r.best_parameter == 0.3);
  CHECK(r.coarse_points == 5);
  CHECK(r.trace.size() == 5 + 2 + 4);
  CHECK(r.trace.back().parameter <= 1.2);
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    const auto& p = r.trace[i];
    CHECK(p.estimate.p_hat == 1.0);
    CHECK(p.parameter >= 0.3);
    if (i >= 5) CHECK(p.parameter <= 0.3 * std::pow(4.0, 0.25) + 1e-12);
  }
  CHECK_THROWS_AS(optimize_parameter(constant, 0.3, 1.2, 2, 100, 1), InvalidArgument);
  CHECK_THROWS_AS(optimize_parameter(constant, 1.2, 0.3, 5, 100, 1), InvalidArgument);
}

TEST_CASE("optimize_hex_edge finds the minimum near 0.61") {
  const OptimizationResult r = optimize_hex_edge(0.3, 1.2, 25, 200'000, 42);
  CHECK(std::abs(r.best_parameter - 0.61) <= 0.05);
  CHECK(std::abs(r.best_estimate.p_hat - 0.13) <= 0.02);
  CHECK(r.trace.front().parameter == doctest::Approx(0.3));
  CHECK(r.trace[24].parameter == doctest::Approx(1.2));
  const double floor_value = lower_bound(3).value.value();
  for (const auto& p : r.trace) CHECK(p.estimate.p_hat >= floor_value - 4.0 * p.estimate.std_error);
  // Re-running gives the same trace.
  const OptimizationResult again = optimize_hex_edge(0.3, 1.2, 25, 200'000, 42);
  CHECK(to_json(again).dump() == to_json(r).dump());
  CHECK(evaluation_seed(42, 0.61) == evaluation_seed(42, 0.61));
  CHECK(evaluation_seed(42, 0.61) != evaluation_seed(42, std::nextafter(0.61, 1.0)));
}
