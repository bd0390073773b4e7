#include "mononeedle/hyperdim.hpp"

#include <cmath>
#include <numeric>

namespace mononeedle {

namespace {

void require_dimension(int d) {
  if (d < 2 || d > kMaxDimension) {
    throw InvalidArgument("dimension must be in [2, " + std::to_string(kMaxDimension) + "], got " + std::to_string(d));
  }
}

}  // namespace

SlabColoring::SlabColoring(int dimension, double width, int axis) : dimension_(dimension), width_(width), axis_(axis) {
  require_dimension(dimension);
  if (!(width > 0.0) || !std::isfinite(width)) throw InvalidArgument("slab width must be positive");
  if (axis < 0 || axis >= dimension) throw InvalidArgument("slab axis out of range");
}

ColorIndex SlabColoring::color_at(const PointD& p) const noexcept {
  const auto j = static_cast<std::int64_t>(std::floor(p[axis_] / width_));
  return static_cast<ColorIndex>(((j % 2) + 2) % 2);
}

PointD SlabColoring::cell_extents() const {
  PointD e = PointD::Ones(dimension_);
  e[axis_] = 2.0 * width_;
  return e;
}

ConstantColoringD::ConstantColoringD(int dimension) : dimension_(dimension) { require_dimension(dimension); }

EmbeddedGraphD::EmbeddedGraphD(int dimension, std::vector<PointD> vertices, std::vector<Edge> edges)
    : dimension_(dimension), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (dimension < 1) throw InvalidArgument("graph dimension must be positive");
  for (const PointD& v : vertices_) {
    if (v.size() != dimension) throw InvalidArgument("vertex has the wrong number of coordinates");
    if (!v.allFinite()) throw InvalidArgument("vertex coordinates must be finite");
  }
  validate_edges(num_vertices(), edges_);
}

bool verify_unit_embedding(const EmbeddedGraphD& g, double tol) {
  for (const Edge& e : g.edges()) {
    const double len =
        (g.vertices()[static_cast<std::size_t>(e.j)] - g.vertices()[static_cast<std::size_t>(e.i)]).norm();
    if (!(std::abs(len - 1.0) <= tol)) return false;
  }
  return true;
}

MkResult solve_mk(const EmbeddedGraphD& g, int k, const SolveOptions& options) {
  return solve_mk(g.num_vertices(), g.edges(), k, options);
}

PointD sample_sphere(int d, RngStream& rng) {
  require_dimension(d);
  PointD v(d);
  double n2 = 0.0;
  do {
    for (int i = 0; i < d; ++i) v[i] = rng.normal();
    n2 = v.squaredNorm();
  } while (n2 == 0.0);
  return v / std::sqrt(n2);
}

RotationD sample_rotation(int d, RngStream& rng) {
  require_dimension(d);
  Eigen::MatrixXd z(d, d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) z(i, j) = rng.normal();
  }
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(z);
  RotationD q = qr.householderQ();
  const auto r = qr.matrixQR();
  // Making diag(R) positive makes the factorization unique, so Q is Haar on O(d).
  for (int j = 0; j < d; ++j) {
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  if (q.determinant() < 0.0) q.col(0) = -q.col(0);
  return q;
}

namespace {

PointD uniform_in_box(const PointD& extents, RngStream& rng) {
  PointD p(extents.size());
  for (Eigen::Index i = 0; i < extents.size(); ++i) p[i] = extents[i] * rng.uniform01();
  return p;
}

}  // namespace

Estimate estimate_p_per_d(const ColoringD& c, std::int64_t n, std::uint64_t seed, const ParallelOptions& options) {
  if (n < 1) throw InvalidArgument("sample count n must be at least 1");
  const int d = c.dimension();
  const PointD extents = c.cell_extents();
  const auto hits = run_chunks<std::int64_t>(n, options, [&](std::int64_t chunk, std::int64_t count) {
    RngStream rng = RngStream::child(seed, static_cast<std::uint64_t>(chunk));
    std::int64_t mono = 0;
    for (std::int64_t i = 0; i < count; ++i) {
      const PointD a = uniform_in_box(extents, rng);
      const PointD b = a + sample_sphere(d, rng);
      mono += c.color_at(a) == c.color_at(b) ? 1 : 0;
    }
    return mono;
  });
  return make_estimate(std::accumulate(hits.begin(), hits.end(), std::int64_t{0}), n, seed, Process::needle);
}

Estimate estimate_graph_throw_d(const ColoringD& c, const EmbeddedGraphD& g, std::int64_t n, std::uint64_t seed,
                                const ParallelOptions& options) {
  if (n < 1) throw InvalidArgument("sample count n must be at least 1");
  if (g.dimension() != c.dimension()) throw InvalidArgument("graph and coloring dimensions differ");
  if (g.num_edges() == 0) throw InvalidArgument("graph has no edges to throw");
  if (!verify_unit_embedding(g)) throw InvalidArgument("graph is not a unit-distance embedding");
  const int d = c.dimension();
  const PointD extents = c.cell_extents();
  const auto edge_count = static_cast<std::uint64_t>(g.num_edges());
  const auto hits = run_chunks<std::int64_t>(n, options, [&](std::int64_t chunk, std::int64_t count) {
    RngStream rng = RngStream::child(seed, static_cast<std::uint64_t>(chunk));
    std::int64_t mono = 0;
    for (std::int64_t i = 0; i < count; ++i) {
      const PointD origin = uniform_in_box(extents, rng);
      const RotationD rot = sample_rotation(d, rng);
      const Edge& e = g.edges()[rng.below(edge_count)];
      const PointD a = rot * g.vertices()[static_cast<std::size_t>(e.i)] + origin;
      const PointD b = rot * g.vertices()[static_cast<std::size_t>(e.j)] + origin;
      mono += c.color_at(a) == c.color_at(b) ? 1 : 0;
    }
    return mono;
  });
  return make_estimate(std::accumulate(hits.begin(), hits.end(), std::int64_t{0}), n, seed, Process::graph_throw);
}

EmbeddedGraphD regular_simplex(int k) {
  if (k < 1) throw InvalidArgument("simplex dimension k must be at least 1");
  // Scaled basis vectors e_i/√2 are pairwise at unit distance; the last vertex
  // t·(1,…,1) solves k t² − √2 t − 1/2 = 0. Everything is then centered.
  const double t = (std::sqrt(2.0) + std::sqrt(2.0 + 2.0 * k)) / (2.0 * k);
  std::vector<PointD> v;
  for (int i = 0; i < k; ++i) v.push_back(PointD::Unit(k, i) / std::sqrt(2.0));
  v.push_back(PointD::Constant(k, t));
  PointD centroid = PointD::Zero(k);
  for (const auto& p : v) centroid += p;
  centroid /= static_cast<double>(v.size());
  for (auto& p : v) p -= centroid;
  std::vector<Edge> edges;
  for (int i = 0; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) edges.push_back({i, j});
  }
  return EmbeddedGraphD(k, std::move(v), std::move(edges));
}

EmbeddedGraphD unit_segment(int d) {
  if (d < 1) throw InvalidArgument("dimension must be positive");
  return EmbeddedGraphD(d, {PointD::Zero(d), PointD::Unit(d, 0)}, {{0, 1}});
}

Rational simplex_bound(int k) {
  if (k < 1) throw InvalidArgument("k must be at least 1");
  const Rational bound(1, static_cast<std::int64_t>(k + 1) * k / 2);
  if (k <= kMaxDimension) {
    const MkResult exact = solve_mk(regular_simplex(k), k);
    if (exact.value != bound) throw std::logic_error("simplex bound disagrees with the exact solver");
  }
  return bound;
}

}  // namespace mononeedle
