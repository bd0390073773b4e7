#include "mononeedle/graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <set>

#include "mononeedle/io.hpp"

namespace mononeedle {

void validate_edges(int num_vertices, std::span<const Edge> edges) {
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges) {
    if (e.i < 0 || e.j < 0 || e.i >= num_vertices || e.j >= num_vertices) {
      throw InvalidArgument("edge (" + std::to_string(e.i) + ", " + std::to_string(e.j) +
                            ") references a missing vertex");
    }
    if (e.i == e.j) throw InvalidArgument("self-loop at vertex " + std::to_string(e.i));
    if (e.i > e.j) throw InvalidArgument("edge endpoints must be ordered i < j");
    if (!seen.emplace(e.i, e.j).second) {
      throw InvalidArgument("duplicate edge (" + std::to_string(e.i) + ", " + std::to_string(e.j) + ")");
    }
  }
}

EmbeddedGraph::EmbeddedGraph(std::vector<Point2> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (Point2 p : vertices_) {
    if (!is_finite(p)) throw InvalidArgument("vertex coordinates must be finite");
  }
  validate_edges(num_vertices(), edges_);
}

std::vector<double> EmbeddedGraph::edge_angles() const {
  std::vector<double> angles;
  angles.reserve(edges_.size());
  for (const Edge& e : edges_) {
    const Vec2 d = vertices_[static_cast<std::size_t>(e.j)] - vertices_[static_cast<std::size_t>(e.i)];
    double a = std::atan2(d.y, d.x);
    if (a < 0.0) a += 2.0 * std::numbers::pi;
    angles.push_back(a);
  }
  return angles;
}

EmbeddedGraph EmbeddedGraph::relabeled(std::span<const int> perm) const {
  if (perm.size() != vertices_.size()) throw InvalidArgument("permutation size mismatch");
  std::vector<Point2> v(vertices_.size());
  for (std::size_t i = 0; i < perm.size(); ++i) v[static_cast<std::size_t>(perm[i])] = vertices_[i];
  std::vector<Edge> e;
  e.reserve(edges_.size());
  for (const Edge& old : edges_) {
    const int a = perm[static_cast<std::size_t>(old.i)];
    const int b = perm[static_cast<std::size_t>(old.j)];
    e.push_back({std::min(a, b), std::max(a, b)});
  }
  return EmbeddedGraph(std::move(v), std::move(e));
}

bool verify_unit_embedding(const EmbeddedGraph& g, double tol) {
  for (const Edge& e : g.edges()) {
    const double len = norm(g.vertices()[static_cast<std::size_t>(e.j)] - g.vertices()[static_cast<std::size_t>(e.i)]);
    if (!(std::abs(len - 1.0) <= tol)) return false;
  }
  return true;
}

std::int64_t monochromatic_count(std::span<const Edge> edges, std::span<const ColorIndex> colors) {
  std::int64_t count = 0;
  for (const Edge& e : edges) {
    const auto i = static_cast<std::size_t>(e.i);
    const auto j = static_cast<std::size_t>(e.j);
    if (i >= colors.size() || j >= colors.size()) {
      throw InvalidArgument("color assignment is shorter than the vertex set");
    }
    if (colors[i] == colors[j]) ++count;
  }
  return count;
}

std::int64_t monochromatic_count(const EmbeddedGraph& g, std::span<const ColorIndex> colors) {
  if (colors.size() != static_cast<std::size_t>(g.num_vertices())) {
    throw InvalidArgument("color assignment length " + std::to_string(colors.size()) +
                          " does not match vertex count " + std::to_string(g.num_vertices()));
  }
  return monochromatic_count(g.edges(), colors);
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(int num_vertices, std::span<const Edge> edges, int k, std::int64_t max_nodes)
      : k_(k), max_nodes_(max_nodes), earlier_(static_cast<std::size_t>(num_vertices)),
        current_(static_cast<std::size_t>(num_vertices), 0) {
    for (const Edge& e : edges) earlier_[static_cast<std::size_t>(e.j)].push_back(e.i);
    best_count_ = static_cast<std::int64_t>(edges.size()) + 1;
  }

  void run() {
    if (current_.empty()) {
      best_count_ = 0;
      return;
    }
    // Color symmetry: vertex 0 is always color 0.
    current_[0] = 0;
    descend(1, 0);
  }

  std::int64_t best_count() const noexcept { return best_count_; }
  const ColorAssignment& best() const noexcept { return best_; }
  std::int64_t nodes() const noexcept { return nodes_; }

 private:
  void descend(std::size_t v, std::int64_t mono) {
    if (++nodes_ > max_nodes_) {
      throw ResourceLimitError("m_k search exceeded the node budget of " + std::to_string(max_nodes_));
    }
    if (mono >= best_count_) return;
    if (v == current_.size()) {
      best_count_ = mono;
      best_ = current_;
      return;
    }
    for (ColorIndex c = 0; c < k_; ++c) {
      std::int64_t added = 0;
      for (int u : earlier_[v]) added += current_[static_cast<std::size_t>(u)] == c ? 1 : 0;
      current_[v] = c;
      descend(v + 1, mono + added);
      if (best_count_ == 0) return;
    }
  }

  int k_;
  std::int64_t max_nodes_;
  std::vector<std::vector<int>> earlier_;
  ColorAssignment current_;
  ColorAssignment best_;
  std::int64_t best_count_ = 0;
  std::int64_t nodes_ = 0;
};

}  // namespace

MkResult solve_mk(int num_vertices, std::span<const Edge> edges, int k, const SolveOptions& options) {
  if (k < 1) throw InvalidArgument("k must be at least 1");
  if (edges.empty()) throw InvalidArgument("m_k is undefined for a graph without edges");
  validate_edges(num_vertices, edges);

  BranchAndBound search(num_vertices, edges, k, options.max_nodes);
  search.run();

  MkResult result;
  result.monochromatic_edges = search.best_count();
  result.value = Rational(search.best_count(), static_cast<std::int64_t>(edges.size()));
  result.witness = search.best();
  result.nodes_visited = search.nodes();
  return result;
}

MkResult solve_mk(const EmbeddedGraph& g, int k, const SolveOptions& options) {
  return solve_mk(g.num_vertices(), g.edges(), k, options);
}

// ---------------------------------------------------------------------------
// Catalog

EmbeddedGraph unit_triangle() {
  return EmbeddedGraph({{0.0, 0.0}, {1.0, 0.0}, {0.5, 0.5 * std::numbers::sqrt3}}, {{0, 1}, {0, 2}, {1, 2}});
}

EmbeddedGraph moser_spindle() {
  using std::numbers::pi;
  using std::numbers::sqrt3;
  // A rhombus of two unit triangles along direction α has its far tip at √3·e^{iα};
  // turning the second one by 2·asin(1/(2√3)) puts the two tips at distance 1.
  const double alpha1 = pi / 2.0;
  const double alpha2 = alpha1 + 2.0 * std::asin(1.0 / (2.0 * sqrt3));
  auto rhombus = [](double alpha) {
    return std::array<Point2, 3>{unit(alpha - pi / 6.0), unit(alpha + pi / 6.0), sqrt3 * unit(alpha)};
  };
  const auto r1 = rhombus(alpha1);
  const auto r2 = rhombus(alpha2);
  std::vector<Point2> v{{0.0, 0.0}, r1[0], r1[1], r1[2], r2[0], r2[1], r2[2]};
  std::vector<Edge> e{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {4, 5}, {4, 6}, {5, 6}, {3, 6}};
  return EmbeddedGraph(std::move(v), std::move(e));
}

EmbeddedGraph unit_rhombus() {
  const double h = 0.5 * std::numbers::sqrt3;
  return EmbeddedGraph({{0.0, 0.0}, {1.0, 0.0}, {0.5, h}, {0.5, -h}}, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
}

EmbeddedGraph hexagonal_wheel() {
  std::vector<Point2> v{{0.0, 0.0}};
  std::vector<Edge> e;
  for (int i = 0; i < 6; ++i) {
    v.push_back(unit(i * std::numbers::pi / 3.0));
    e.push_back({0, i + 1});
  }
  for (int i = 1; i <= 6; ++i) {
    const int next = i == 6 ? 1 : i + 1;
    e.push_back({std::min(i, next), std::max(i, next)});
  }
  return EmbeddedGraph(std::move(v), std::move(e));
}

EmbeddedGraph unit_pentagon() {
  const double circumradius = 1.0 / (2.0 * std::sin(std::numbers::pi / 5.0));
  std::vector<Point2> v;
  for (int i = 0; i < 5; ++i) v.push_back(circumradius * unit(2.0 * std::numbers::pi * i / 5.0));
  return EmbeddedGraph(std::move(v), {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries{
      {"triangle", unit_triangle()},
      {"moser_spindle", moser_spindle()},
      {"rhombus", unit_rhombus()},
      {"hexagonal_wheel", hexagonal_wheel()},
      {"pentagon", unit_pentagon()},
  };
  return entries;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& entry : catalog()) names.push_back(entry.name);
  return names;
}

EmbeddedGraph find_graph(const std::string& name) {
  if (name.rfind("file:", 0) == 0) return load_graph_file(name.substr(5));
  for (const auto& entry : catalog()) {
    if (entry.name == name) return entry.graph;
  }
  std::string names;
  for (const auto& n : catalog_names()) names += (names.empty() ? "" : ", ") + n;
  throw InvalidArgument("unknown graph '" + name + "'; available: " + names + ", file:<path>");
}

}  // namespace mononeedle
