#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mononeedle/bounds.hpp"
#include "mononeedle/cli.hpp"
#include "mononeedle/coloring.hpp"
#include "mononeedle/errors.hpp"
#include "mononeedle/estimator.hpp"
#include "mononeedle/graph.hpp"
#include "mononeedle/hyperdim.hpp"
#include "mononeedle/io.hpp"

namespace py = pybind11;
using namespace mononeedle;

namespace {

ParallelOptions threads_option(int threads) {
  ParallelOptions options;
  options.threads = threads;
  return options;
}

std::shared_ptr<Coloring> mutable_ptr(ColoringPtr c) { return std::const_pointer_cast<Coloring>(std::move(c)); }

py::tuple point(Point2 p) { return py::make_tuple(p.x, p.y); }

}  // namespace

PYBIND11_MODULE(_mononeedle, m) {
  m.doc() = "Monochromatic needle probabilities of k-colorings of the plane";

  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);

  py::class_<Estimate>(m, "Estimate")
      .def_readonly("p_hat", &Estimate::p_hat)
      .def_readonly("n", &Estimate::n)
      .def_readonly("successes", &Estimate::successes)
      .def_readonly("stderr", &Estimate::std_error)
      .def_readonly("seed", &Estimate::seed)
      .def_readonly("draws", &Estimate::draws)
      .def_property_readonly("ci95", [](const Estimate& e) { return py::make_tuple(e.ci_lo, e.ci_hi); })
      .def_property_readonly("process", [](const Estimate& e) { return to_string(e.process); })
      .def_property_readonly("acceptance_rate", &Estimate::acceptance_rate)
      .def("to_json", [](const Estimate& e) { return to_json(e).dump(); })
      .def("__repr__", [](const Estimate& e) {
        std::ostringstream os;
        os << "Estimate(p_hat=" << e.p_hat << ", stderr=" << e.std_error << ", n=" << e.n << ", seed=" << e.seed
           << ")";
        return os.str();
      });

  m.def("combined_stderr", &combined_stderr, py::arg("a"), py::arg("b"));

  py::class_<Coloring, std::shared_ptr<Coloring>>(m, "Coloring")
      .def("color_at", [](const Coloring& c, double x, double y) { return c.color_at({x, y}); }, py::arg("x"),
           py::arg("y"))
      .def_property_readonly("num_colors", &Coloring::num_colors)
      .def_property_readonly("period",
                             [](const Coloring& c) { return py::make_tuple(point(c.lattice().u()), point(c.lattice().v())); })
      .def("describe", &Coloring::describe)
      .def("__repr__", [](const Coloring& c) { return "<Coloring " + c.describe() + ">"; });
  py::class_<ConstantColoring, Coloring, std::shared_ptr<ConstantColoring>>(m, "ConstantColoring").def(py::init<>());
  py::class_<StripeColoring, Coloring, std::shared_ptr<StripeColoring>>(m, "StripeColoring")
      .def(py::init<double>(), py::arg("width"));
  py::class_<Hex3Coloring, Coloring, std::shared_ptr<Hex3Coloring>>(m, "Hex3Coloring")
      .def(py::init<double>(), py::arg("edge"));
  py::class_<GridColoring, Coloring, std::shared_ptr<GridColoring>>(m, "GridColoring")
      .def(py::init<double, int, int, std::vector<ColorIndex>>(), py::arg("period"), py::arg("subdivisions"),
           py::arg("k"), py::arg("cells"));

  m.def("parse_coloring", [](const std::string& spec) { return mutable_ptr(parse_coloring(spec)); }, py::arg("spec"));
  m.def("coloring_kinds", &coloring_kinds);
  m.def(
      "random_grid",
      [](double period, int subdivisions, int k, std::uint64_t seed) {
        return std::make_shared<GridColoring>(make_random_grid(period, subdivisions, k, seed));
      },
      py::arg("period"), py::arg("subdivisions"), py::arg("k"), py::arg("seed"));

  py::class_<EmbeddedGraph>(m, "Graph")
      .def(py::init([](const std::vector<std::pair<double, double>>& vertices,
                       const std::vector<std::pair<int, int>>& edges) {
             std::vector<Point2> v;
             for (const auto& [x, y] : vertices) v.push_back({x, y});
             std::vector<Edge> e;
             for (const auto& [i, j] : edges) e.push_back({i, j});
             return EmbeddedGraph(std::move(v), std::move(e));
           }),
           py::arg("vertices"), py::arg("edges"))
      .def_property_readonly("num_vertices", &EmbeddedGraph::num_vertices)
      .def_property_readonly("num_edges", &EmbeddedGraph::num_edges)
      .def_property_readonly("vertices",
                             [](const EmbeddedGraph& g) {
                               py::list out;
                               for (const auto& p : g.vertices()) out.append(point(p));
                               return out;
                             })
      .def_property_readonly("edges", [](const EmbeddedGraph& g) {
        py::list out;
        for (const auto& e : g.edges()) out.append(py::make_tuple(e.i, e.j));
        return out;
      });
  m.def("find_graph", &find_graph, py::arg("name"));
  m.def("catalog_names", &catalog_names);
  m.def("is_unit_distance", py::overload_cast<const EmbeddedGraph&, double>(&verify_unit_embedding), py::arg("graph"),
        py::arg("tol") = 1e-9);

  py::class_<MkResult>(m, "MkResult")
      .def_property_readonly("numerator", [](const MkResult& r) { return r.value.num(); })
      .def_property_readonly("denominator", [](const MkResult& r) { return r.value.den(); })
      .def_readonly("witness", &MkResult::witness)
      .def_readonly("monochromatic_edges", &MkResult::monochromatic_edges)
      .def_readonly("nodes_visited", &MkResult::nodes_visited)
      .def("__str__", &format_fraction);
  m.def(
      "solve_mk",
      [](const EmbeddedGraph& g, int k, std::int64_t max_nodes) {
        SolveOptions options;
        options.max_nodes = max_nodes;
        return solve_mk(g, k, options);
      },
      py::arg("graph"), py::arg("k"), py::arg("max_nodes") = SolveOptions{}.max_nodes,
      py::call_guard<py::gil_scoped_release>());

  m.def(
      "estimate_p_per",
      [](const Coloring& c, std::int64_t n, std::uint64_t seed, int threads) {
        return estimate_p_per(c, n, seed, threads_option(threads));
      },
      py::arg("coloring"), py::arg("n"), py::arg("seed"), py::arg("threads") = 0,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "estimate_via_graph_throw",
      [](const Coloring& c, const EmbeddedGraph& g, std::int64_t n, std::uint64_t seed, int threads) {
        return estimate_via_graph_throw(c, g, n, seed, threads_option(threads));
      },
      py::arg("coloring"), py::arg("graph"), py::arg("n"), py::arg("seed"), py::arg("threads") = 0,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "estimate_p_table",
      [](const Coloring& c, double half_width, std::int64_t n, std::uint64_t seed, int threads) {
        return estimate_p_table(c, Rect(half_width), n, seed, threads_option(threads));
      },
      py::arg("coloring"), py::arg("half_width"), py::arg("n"), py::arg("seed"), py::arg("threads") = 0,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "estimate_random_grid_ensemble",
      [](double period, int subdivisions, int k, std::int64_t n, std::uint64_t seed, int threads) {
        return estimate_random_grid_ensemble(period, subdivisions, k, n, seed, threads_option(threads));
      },
      py::arg("period"), py::arg("subdivisions"), py::arg("k"), py::arg("n"), py::arg("seed"), py::arg("threads") = 0,
      py::call_guard<py::gil_scoped_release>());
  m.def("exact_stripe_p", &exact_stripe_p, py::arg("width"));
  m.def(
      "joint_distribution",
      [](const Coloring& c, std::int64_t n, std::uint64_t seed, int threads) {
        const JointDistribution j = joint_distribution(c, n, seed, threads_option(threads));
        std::vector<std::vector<double>> rows(static_cast<std::size_t>(j.k));
        for (int a = 0; a < j.k; ++a)
          for (int b = 0; b < j.k; ++b) rows[static_cast<std::size_t>(a)].push_back(j.at(a, b));
        return rows;
      },
      py::arg("coloring"), py::arg("n"), py::arg("seed"), py::arg("threads") = 0);

  m.def(
      "lower_bound",
      [](int k) {
        const LowerBound b = lower_bound(k);
        return py::make_tuple(b.value.num(), b.value.den(), b.witness);
      },
      py::arg("k"));
  m.def("min_edges_non_k_colorable", &min_edges_non_k_colorable, py::arg("estimate"));
  m.def("table_bound_gap", [](double half_width) { return table_bound_gap(Rect(half_width)); }, py::arg("half_width"));

  py::class_<OptimizationResult>(m, "OptimizationResult")
      .def_readonly("best_parameter", &OptimizationResult::best_parameter)
      .def_readonly("best_estimate", &OptimizationResult::best_estimate)
      .def_readonly("coarse_points", &OptimizationResult::coarse_points)
      .def_property_readonly("trace", [](const OptimizationResult& r) {
        py::list out;
        for (const auto& p : r.trace) out.append(py::make_tuple(p.parameter, p.estimate));
        return out;
      });
  m.def(
      "optimize_hex_edge",
      [](double s_min, double s_max, int budget, std::int64_t n, std::uint64_t seed, int threads) {
        return optimize_hex_edge(s_min, s_max, budget, n, seed, threads_option(threads));
      },
      py::arg("s_min") = 0.3, py::arg("s_max") = 1.2, py::arg("budget") = 25, py::arg("n") = 1'000'000,
      py::arg("seed") = 0, py::arg("threads") = 0, py::call_guard<py::gil_scoped_release>());

  m.def(
      "simplex_bound",
      [](int k) {
        const Rational r = simplex_bound(k);
        return py::make_tuple(r.num(), r.den());
      },
      py::arg("k"));
  m.def(
      "estimate_slab",
      [](int d, double width, std::int64_t n, std::uint64_t seed, int threads) {
        return estimate_p_per_d(SlabColoring(d, width), n, seed, threads_option(threads));
      },
      py::arg("d"), py::arg("width"), py::arg("n"), py::arg("seed"), py::arg("threads") = 0,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "estimate_slab_simplex_throw",
      [](int d, double width, std::int64_t n, std::uint64_t seed, int threads) {
        return estimate_graph_throw_d(SlabColoring(d, width), regular_simplex(d), n, seed, threads_option(threads));
      },
      py::arg("d"), py::arg("width"), py::arg("n"), py::arg("seed"), py::arg("threads") = 0,
      py::call_guard<py::gil_scoped_release>());

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = 0;
        {
          py::gil_scoped_release release;
          code = cli::run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
