#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mononeedle/coloring.hpp"
#include "mononeedle/geometry.hpp"
#include "mononeedle/rational.hpp"

namespace mononeedle {

struct Edge {
  int i = 0;
  int j = 0;
  friend constexpr bool operator==(Edge, Edge) = default;
};

/// Checks i < j, indices in range, no duplicates. Throws InvalidArgument.
void validate_edges(int num_vertices, std::span<const Edge> edges);

/// Finite graph with planar vertex coordinates z_j; edge (i, j) is the needle z_i → z_j.
class EmbeddedGraph {
 public:
  EmbeddedGraph(std::vector<Point2> vertices, std::vector<Edge> edges);

  int num_vertices() const noexcept { return static_cast<int>(vertices_.size()); }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Point2>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// θ_j = direction of z_j(end) − z_j(start).
  std::vector<double> edge_angles() const;

  /// Same graph with vertex v moved to position perm[v].
  EmbeddedGraph relabeled(std::span<const int> perm) const;

 private:
  std::vector<Point2> vertices_;
  std::vector<Edge> edges_;
};

using ColorAssignment = std::vector<ColorIndex>;

struct MkResult {
  Rational value;
  ColorAssignment witness;
  std::int64_t monochromatic_edges = 0;
  std::int64_t nodes_visited = 0;
};

struct SolveOptions {
  /// Branch-and-bound node budget; exceeding it raises ResourceLimitError.
  std::int64_t max_nodes = 100'000'000;
};

bool verify_unit_embedding(const EmbeddedGraph& g, double tol = 1e-9);

std::int64_t monochromatic_count(std::span<const Edge> edges, std::span<const ColorIndex> colors);
std::int64_t monochromatic_count(const EmbeddedGraph& g, std::span<const ColorIndex> colors);

/**
 * Exact m_k: the minimum fraction of monochromatic edges over all k-colorings
 * of the vertices.
 *
 * Depth-first branch and bound in vertex order with vertex 0 fixed to color 0;
 * a branch is cut once its monochromatic count reaches the incumbent. The
 * witness is the lexicographically smallest optimal assignment.
 */
MkResult solve_mk(int num_vertices, std::span<const Edge> edges, int k, const SolveOptions& options = {});
MkResult solve_mk(const EmbeddedGraph& g, int k, const SolveOptions& options = {});

EmbeddedGraph unit_triangle();
/// Two unit rhombi sharing an apex, rotated so their far tips are at unit distance.
EmbeddedGraph moser_spindle();
/// Two unit equilateral triangles glued along an edge.
EmbeddedGraph unit_rhombus();
/// Center joined to the six vertices of a unit regular hexagon.
EmbeddedGraph hexagonal_wheel();
/// Regular pentagon with unit sides.
EmbeddedGraph unit_pentagon();

struct CatalogEntry {
  std::string name;
  EmbeddedGraph graph;
};

/// Built-in unit-distance graphs, in tie-break order.
const std::vector<CatalogEntry>& catalog();
std::vector<std::string> catalog_names();

/// Catalog lookup by name, or `file:<path>` for a JSON graph. Unknown names list the alternatives.
EmbeddedGraph find_graph(const std::string& name);

}  // namespace mononeedle
