#include "mononeedle/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "mononeedle/bounds.hpp"
#include "mononeedle/estimator.hpp"
#include "mononeedle/graph.hpp"
#include "mononeedle/hyperdim.hpp"

namespace mononeedle {

namespace {

Point2 point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw InvalidArgument("expected a 2-element coordinate array");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

Json point_to_json(Point2 p) { return Json::array({p.x, p.y}); }

std::vector<Edge> edges_from_json(const Json& doc) {
  std::vector<Edge> edges;
  for (const auto& e : doc.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw InvalidArgument("edges must be [i, j] pairs");
    const int a = e.at(0).get<int>();
    const int b = e.at(1).get<int>();
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return edges;
}

Json edges_to_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(Json::array({e.i, e.j}));
  return out;
}

template <typename Fn>
auto wrap_json_errors(Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed JSON document: ") + e.what());
  }
}

std::string format17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
  }
}

ColoringPtr coloring_from_json(const Json& doc) {
  return wrap_json_errors([&]() -> ColoringPtr {
    const int k = doc.at("k").get<int>();
    if (doc.contains("cells")) {
      const Json& rows = doc.at("cells");
      const int n = static_cast<int>(rows.size());
      double period = 0.0;
      if (doc.contains("lattice")) {
        const Point2 u = point_from_json(doc.at("lattice").at("u"));
        const Point2 v = point_from_json(doc.at("lattice").at("v"));
        if (u.y != 0.0 || v.x != 0.0 || u.x != v.y) {
          throw InvalidConstruction("grid lattice must be u = (R, 0), v = (0, R)");
        }
        period = u.x;
      } else {
        period = doc.at("period").get<double>();
      }
      std::vector<ColorIndex> cells;
      for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n) throw InvalidConstruction("grid cells must form an n x n matrix");
        for (const auto& c : row) cells.push_back(c.get<int>());
      }
      return std::make_shared<GridColoring>(period, n, k, std::move(cells));
    }
    if (doc.contains("tiles")) {
      const PeriodLattice lattice(point_from_json(doc.at("lattice").at("u")), point_from_json(doc.at("lattice").at("v")));
      std::vector<Tile> tiles;
      for (const auto& t : doc.at("tiles")) {
        Tile tile;
        for (const auto& p : t.at("polygon")) tile.polygon.push_back(point_from_json(p));
        tile.color = t.at("color").get<int>();
        tiles.push_back(std::move(tile));
      }
      return std::make_shared<PolygonalColoring>(lattice, k, std::move(tiles));
    }
    throw InvalidArgument("coloring document needs either 'tiles' or 'cells'");
  });
}

ColoringPtr load_coloring_file(const std::string& path) { return coloring_from_json(read_json_file(path)); }

Json to_json(const GridColoring& c) {
  Json rows = Json::array();
  const int n = c.subdivisions();
  for (int iy = 0; iy < n; ++iy) {
    Json row = Json::array();
    for (int ix = 0; ix < n; ++ix) row.push_back(c.cells()[static_cast<std::size_t>(iy * n + ix)]);
    rows.push_back(std::move(row));
  }
  return Json{{"lattice", {{"u", point_to_json(c.lattice().u())}, {"v", point_to_json(c.lattice().v())}}},
              {"k", c.num_colors()},
              {"cells", std::move(rows)}};
}

Json to_json(const PolygonalColoring& c) {
  Json tiles = Json::array();
  for (const Tile& t : c.tiles()) {
    Json poly = Json::array();
    for (Point2 p : t.polygon) poly.push_back(point_to_json(p));
    tiles.push_back(Json{{"polygon", std::move(poly)}, {"color", t.color}});
  }
  return Json{{"lattice", {{"u", point_to_json(c.lattice().u())}, {"v", point_to_json(c.lattice().v())}}},
              {"k", c.num_colors()},
              {"tiles", std::move(tiles)}};
}

EmbeddedGraph graph_from_json(const Json& doc) {
  return wrap_json_errors([&] {
    std::vector<Point2> vertices;
    for (const auto& v : doc.at("vertices")) vertices.push_back(point_from_json(v));
    return EmbeddedGraph(std::move(vertices), edges_from_json(doc));
  });
}

EmbeddedGraph load_graph_file(const std::string& path) { return graph_from_json(read_json_file(path)); }

EmbeddedGraphD graph_d_from_json(const Json& doc) {
  return wrap_json_errors([&] {
    std::vector<PointD> vertices;
    int dimension = -1;
    for (const auto& v : doc.at("vertices")) {
      if (!v.is_array() || v.empty()) throw InvalidArgument("vertices must be non-empty coordinate arrays");
      if (dimension < 0) dimension = static_cast<int>(v.size());
      if (static_cast<int>(v.size()) != dimension) throw InvalidArgument("vertices disagree on dimension");
      PointD p(dimension);
      for (int i = 0; i < dimension; ++i) p[i] = v.at(static_cast<std::size_t>(i)).get<double>();
      vertices.push_back(std::move(p));
    }
    if (dimension < 0) throw InvalidArgument("graph has no vertices");
    return EmbeddedGraphD(dimension, std::move(vertices), edges_from_json(doc));
  });
}

EmbeddedGraphD load_graph_d_file(const std::string& path) { return graph_d_from_json(read_json_file(path)); }

Json to_json(const EmbeddedGraph& g) {
  Json vertices = Json::array();
  for (Point2 p : g.vertices()) vertices.push_back(point_to_json(p));
  return Json{{"vertices", std::move(vertices)}, {"edges", edges_to_json(g.edges())}};
}

Json to_json(const EmbeddedGraphD& g) {
  Json vertices = Json::array();
  for (const PointD& p : g.vertices()) vertices.push_back(std::vector<double>(p.data(), p.data() + p.size()));
  return Json{{"vertices", std::move(vertices)}, {"edges", edges_to_json(g.edges())}};
}

Json to_json(const Estimate& e) {
  Json out{{"p_hat", e.p_hat},
           {"n", e.n},
           {"stderr", e.std_error},
           {"ci95", Json::array({e.ci_lo, e.ci_hi})},
           {"seed", e.seed},
           {"process", to_string(e.process)}};
  if (e.process == Process::table) {
    out["draws"] = e.draws;
    out["acceptance_rate"] = e.acceptance_rate();
  }
  return out;
}

Json to_json(const JointDistribution& j) {
  Json rows = Json::array();
  for (int a = 0; a < j.k; ++a) {
    Json row = Json::array();
    for (int b = 0; b < j.k; ++b) row.push_back(j.at(a, b));
    rows.push_back(std::move(row));
  }
  return Json{{"k", j.k}, {"n", j.n}, {"matrix", std::move(rows)}, {"diagonal_sum", j.diagonal_sum()}};
}

std::string format_fraction(const MkResult& r) {
  return r.value.str() + " (" + format17(r.value.value()) + ")";
}

Json to_json(const MkResult& r) {
  return Json{{"value", r.value.str()},
              {"numerator", r.value.num()},
              {"denominator", r.value.den()},
              {"decimal", r.value.value()},
              {"monochromatic_edges", r.monochromatic_edges},
              {"witness", r.witness}};
}

Json to_json(const LowerBound& b) {
  return Json{{"value", b.value.str()}, {"decimal", b.value.value()}, {"witness", b.witness},
              {"witness_coloring", b.witness_coloring}};
}

Json to_json(const BoundsReport& r) {
  const double upper_edge = r.upper.realization.p_hat + 4.0 * r.upper.realization.std_error;
  return Json{{"k", r.k},
              {"lower", to_json(r.lower)},
              {"upper",
               {{"target", 1.0 / r.k},
                {"coloring", r.upper.coloring.describe()},
                {"attempts", r.upper.attempts},
                {"realization", to_json(r.upper.realization)},
                {"ensemble", to_json(r.upper.ensemble)}}},
              {"consistent", r.lower.value.value() <= upper_edge}};
}

Json to_json(const SweepPoint& p) { return Json{{"parameter", p.parameter}, {"estimate", to_json(p.estimate)}}; }

Json to_json(const OptimizationResult& r) {
  Json trace = Json::array();
  for (const auto& p : r.trace) trace.push_back(to_json(p));
  return Json{{"best_parameter", r.best_parameter},
              {"best_estimate", to_json(r.best_estimate)},
              {"coarse_points", r.coarse_points},
              {"trace", std::move(trace)}};
}

void write_sweep_csv(const std::vector<SweepPoint>& points, std::ostream& out) {
  if (points.empty()) throw InvalidArgument("sweep has no points to write");
  out << "parameter,p_hat,stderr,n,seed\n";
  for (const auto& p : points) {
    out << format17(p.parameter) << ',' << format17(p.estimate.p_hat) << ',' << format17(p.estimate.std_error) << ','
        << p.estimate.n << ',' << p.estimate.seed << '\n';
  }
}

void write_sweep_csv(const std::vector<SweepPoint>& points, const std::string& path) {
  if (points.empty()) throw InvalidArgument("sweep has no points to write");
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  write_sweep_csv(points, out);
  if (!out) throw InvalidArgument("failed writing '" + path + "'");
}

std::vector<SweepPoint> read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "parameter,p_hat,stderr,n,seed") {
    throw InvalidArgument("sweep CSV has an unexpected header");
  }
  std::vector<SweepPoint> points;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell[5];
    for (auto& c : cell) {
      if (!std::getline(row, c, ',')) throw InvalidArgument("sweep CSV row has fewer than 5 columns");
    }
    SweepPoint p;
    p.parameter = std::stod(cell[0]);
    p.estimate.p_hat = std::stod(cell[1]);
    p.estimate.std_error = std::stod(cell[2]);
    p.estimate.n = std::stoll(cell[3]);
    p.estimate.seed = std::stoull(cell[4]);
    points.push_back(p);
  }
  return points;
}

}  // namespace mononeedle
