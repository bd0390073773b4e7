#include "mononeedle/estimator.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <numeric>

namespace mononeedle {

std::string to_string(Process p) {
  switch (p) {
    case Process::needle:
      return "needle";
    case Process::graph_throw:
      return "graph_throw";
    case Process::table:
      return "table";
    case Process::random_grid:
      return "random_grid";
  }
  return "unknown";
}

Estimate make_estimate(std::int64_t successes, std::int64_t n, std::uint64_t seed, Process process,
                       std::int64_t draws) {
  if (n < 1) throw InvalidArgument("sample count n must be at least 1");
  Estimate e;
  e.successes = successes;
  e.n = n;
  e.p_hat = static_cast<double>(successes) / static_cast<double>(n);
  e.std_error = std::sqrt(e.p_hat * (1.0 - e.p_hat) / static_cast<double>(n));
  e.ci_lo = std::max(0.0, e.p_hat - 1.96 * e.std_error);
  e.ci_hi = std::min(1.0, e.p_hat + 1.96 * e.std_error);
  e.seed = seed;
  e.process = process;
  e.draws = draws > 0 ? draws : n;
  return e;
}

double combined_stderr(const Estimate& a, const Estimate& b) noexcept {
  return std::hypot(a.std_error, b.std_error);
}

namespace {

void require_samples(std::int64_t n) {
  if (n < 1) throw InvalidArgument("sample count n must be at least 1");
}

std::int64_t sum(const std::vector<std::int64_t>& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

}  // namespace

Estimate estimate_p_per(const Coloring& c, std::int64_t n, std::uint64_t seed, const ParallelOptions& options) {
  require_samples(n);
  const PeriodLattice& lattice = c.lattice();
  const auto hits = run_chunks<std::int64_t>(n, options, [&](std::int64_t chunk, std::int64_t count) {
    RngStream rng = RngStream::child(seed, static_cast<std::uint64_t>(chunk));
    std::int64_t mono = 0;
    for (std::int64_t i = 0; i < count; ++i) {
      const Needle needle = sample_needle(lattice, rng);
      mono += c.color_at(needle.a) == c.color_at(needle.b) ? 1 : 0;
    }
    return mono;
  });
  return make_estimate(sum(hits), n, seed, Process::needle);
}

Estimate estimate_via_graph_throw(const Coloring& c, const EmbeddedGraph& g, std::int64_t n, std::uint64_t seed,
                                  const ParallelOptions& options) {
  require_samples(n);
  if (g.num_edges() == 0) throw InvalidArgument("graph has no edges to throw");
  if (!verify_unit_embedding(g)) throw InvalidArgument("graph is not a unit-distance embedding");

  struct EdgeVectors {
    Vec2 start;
    Vec2 end;
  };
  std::vector<EdgeVectors> needles;
  const auto angles = g.edge_angles();
  for (std::size_t j = 0; j < g.edges().size(); ++j) {
    const Vec2 z = g.vertices()[static_cast<std::size_t>(g.edges()[j].i)];
    needles.push_back({z, z + unit(angles[j])});
  }
  const auto edge_count = static_cast<std::uint64_t>(needles.size());
  const PeriodLattice& lattice = c.lattice();

  const auto hits = run_chunks<std::int64_t>(n, options, [&](std::int64_t chunk, std::int64_t count) {
    RngStream rng = RngStream::child(seed, static_cast<std::uint64_t>(chunk));
    std::int64_t mono = 0;
    for (std::int64_t i = 0; i < count; ++i) {
      const double t = rng.uniform01();
      const double s = rng.uniform01();
      const Point2 origin = lattice.from_coordinates(t, s);
      const double theta = rng.angle();
      const EdgeVectors& e = needles[rng.below(edge_count)];
      const double ct = std::cos(theta);
      const double st = std::sin(theta);
      const Point2 a = rotate(e.start, ct, st) + origin;
      const Point2 b = rotate(e.end, ct, st) + origin;
      mono += c.color_at(a) == c.color_at(b) ? 1 : 0;
    }
    return mono;
  });
  return make_estimate(sum(hits), n, seed, Process::graph_throw);
}

Estimate estimate_p_table(const Coloring& c, const Rect& table, std::int64_t n, std::uint64_t seed,
                          const ParallelOptions& options) {
  require_samples(n);
  struct Tally {
    std::int64_t mono = 0;
    std::int64_t draws = 0;
  };
  const double side = table.side();
  const double r = table.half_width();
  const auto tallies = run_chunks<Tally>(n, options, [&](std::int64_t chunk, std::int64_t accepted_target) {
    RngStream rng = RngStream::child(seed, static_cast<std::uint64_t>(chunk));
    Tally tally;
    std::int64_t accepted = 0;
    while (accepted < accepted_target) {
      const Point2 a{side * rng.uniform01() - r, side * rng.uniform01() - r};
      const Point2 b = a + unit(rng.angle());
      ++tally.draws;
      if (!table.contains(b) || !table.contains(a)) continue;
      ++accepted;
      tally.mono += c.color_at(a) == c.color_at(b) ? 1 : 0;
    }
    return tally;
  });
  std::int64_t mono = 0;
  std::int64_t draws = 0;
  for (const Tally& t : tallies) {
    mono += t.mono;
    draws += t.draws;
  }
  return make_estimate(mono, n, seed, Process::table, draws);
}

Estimate estimate_random_grid_ensemble(double period, int subdivisions, int k, std::int64_t n, std::uint64_t seed,
                                       const ParallelOptions& options) {
  require_samples(n);
  {
    // Validates the construction preconditions once.
    RngStream probe(seed);
    (void)make_random_grid(period, subdivisions, k, probe);
  }
  const auto bound = static_cast<std::uint64_t>(k);
  auto cell_of = [&](Point2 p) {
    auto index = [&](double x) {
      double f = x / period;
      f -= std::floor(f);
      return std::clamp(static_cast<int>(f * subdivisions), 0, subdivisions - 1);
    };
    return std::pair{index(p.x), index(p.y)};
  };

  const auto hits = run_chunks<std::int64_t>(n, options, [&](std::int64_t chunk, std::int64_t count) {
    RngStream rng = RngStream::child(seed, static_cast<std::uint64_t>(chunk));
    std::int64_t mono = 0;
    for (std::int64_t i = 0; i < count; ++i) {
      const Point2 a{period * rng.uniform01(), period * rng.uniform01()};
      const Point2 b = a + unit(rng.angle());
      // A fresh i.i.d. grid, evaluated only at the cells the needle touches.
      const ColorIndex ca = static_cast<ColorIndex>(rng.below(bound));
      const ColorIndex cb = cell_of(a) == cell_of(b) ? ca : static_cast<ColorIndex>(rng.below(bound));
      mono += ca == cb ? 1 : 0;
    }
    return mono;
  });
  return make_estimate(sum(hits), n, seed, Process::random_grid);
}

double stripe_difference_probability(double offset, double width) noexcept {
  double delta = std::fmod(std::abs(offset), 2.0 * width);
  if (delta <= width) return delta / width;
  return 2.0 - delta / width;
}

double exact_stripe_p(double width) {
  if (!(width > 0.0) || !std::isfinite(width)) throw InvalidArgument("stripe width must be positive");
  using std::numbers::pi;
  // By symmetry integrate θ over [0, π/2]; the integrand has kinks where
  // sin θ crosses a multiple of the width, so split there.
  std::vector<double> breaks{0.0};
  for (int m = 1; m * width < 1.0; ++m) breaks.push_back(std::asin(m * width));
  breaks.push_back(pi / 2.0);

  auto integrand = [width](double theta) { return stripe_difference_probability(std::sin(theta), width); };
  double integral = 0.0;
  double error_total = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    double error = 0.0;
    integral += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, breaks[i], breaks[i + 1],
                                                                               15, 1e-14, &error);
    error_total += error;
  }
  if (error_total > 1e-10) throw std::runtime_error("stripe quadrature did not reach 1e-10");
  return 1.0 - (2.0 / pi) * integral;
}

double JointDistribution::diagonal_sum() const {
  double s = 0.0;
  for (int c = 0; c < k; ++c) s += at(c, c);
  return s;
}

JointDistribution joint_distribution(const Coloring& c, std::int64_t n, std::uint64_t seed,
                                     const ParallelOptions& options) {
  require_samples(n);
  const int k = c.num_colors();
  const auto kk = static_cast<std::size_t>(k * k);
  const PeriodLattice& lattice = c.lattice();
  const auto tables = run_chunks<std::vector<std::int64_t>>(n, options, [&](std::int64_t chunk, std::int64_t count) {
    RngStream rng = RngStream::child(seed, static_cast<std::uint64_t>(chunk));
    std::vector<std::int64_t> counts(kk, 0);
    for (std::int64_t i = 0; i < count; ++i) {
      const Needle needle = sample_needle(lattice, rng);
      ++counts[static_cast<std::size_t>(c.color_at(needle.a) * k + c.color_at(needle.b))];
    }
    return counts;
  });
  JointDistribution joint;
  joint.k = k;
  joint.n = n;
  joint.counts.assign(kk, 0);
  for (const auto& t : tables) {
    for (std::size_t i = 0; i < kk; ++i) joint.counts[i] += t[i];
  }
  joint.probabilities.resize(kk);
  for (std::size_t i = 0; i < kk; ++i) {
    joint.probabilities[i] = static_cast<double>(joint.counts[i]) / static_cast<double>(n);
  }
  return joint;
}

}  // namespace mononeedle
