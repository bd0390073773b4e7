#include "mononeedle/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mononeedle/bounds.hpp"
#include "mononeedle/estimator.hpp"
#include "mononeedle/graph.hpp"
#include "mononeedle/hyperdim.hpp"
#include "mononeedle/io.hpp"

namespace mononeedle::cli {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (const auto& i : items) s += (s.empty() ? "" : ", ") + i;
  return s;
}

std::uint64_t resolve_seed(const RunConfig& config) {
  if (config.seed) return *config.seed;
  const auto ticks = std::chrono::system_clock::now().time_since_epoch().count();
  std::uint64_t s = static_cast<std::uint64_t>(ticks);
  return splitmix64(s) >> 11;  // keep it exactly representable in JSON consumers
}

Format default_format(Command c) { return c == Command::mk ? Format::text : Format::json; }

std::string text_estimate(const Estimate& e) {
  std::ostringstream os;
  os.precision(10);
  os << "p_hat = " << e.p_hat << " +/- " << e.std_error << " (n = " << e.n << ", seed = " << e.seed
     << ", process = " << to_string(e.process) << ")";
  return os.str();
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

void write_report(const RunConfig& config, std::ostream& out, const std::string& body) {
  if (config.output.empty()) {
    out << body;
    return;
  }
  std::ofstream file(config.output);
  if (!file) throw InvalidArgument("cannot write '" + config.output + "'");
  file << body;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

EmbeddedGraphD resolve_graph_d(const std::string& name, int d) {
  if (name == "simplex") return regular_simplex(d);
  if (name == "segment") return unit_segment(d);
  if (name.rfind("file:", 0) == 0) return load_graph_d_file(name.substr(5));
  throw InvalidArgument("unknown d-dimensional graph '" + name + "'; available: simplex, segment, file:<path>");
}

std::string run_command(const RunConfig& config, std::uint64_t seed) {
  const Format format = config.format.value_or(default_format(config.command));
  const ParallelOptions parallel{config.threads};
  switch (config.command) {
    case Command::estimate: {
      const ColoringPtr coloring = parse_coloring(config.coloring);
      Json report{{"coloring", coloring->describe()}};
      Estimate e;
      if (config.graph.empty()) {
        e = estimate_p_per(*coloring, config.samples, seed, parallel);
      } else {
        e = estimate_via_graph_throw(*coloring, find_graph(config.graph), config.samples, seed, parallel);
        report["graph"] = config.graph;
      }
      report["estimate"] = to_json(e);
      if (config.joint) report["joint"] = to_json(joint_distribution(*coloring, config.samples, seed, parallel));
      if (format == Format::text) return text_estimate(e) + "\n";
      if (format == Format::csv) {
        return "p_hat,stderr,n,seed,process\n" + std::to_string(e.p_hat) + "," + std::to_string(e.std_error) + "," +
               std::to_string(e.n) + "," + std::to_string(e.seed) + "," + to_string(e.process) + "\n";
      }
      return render(report);
    }
    case Command::exact: {
      const double p = exact_stripe_p(config.width);
      if (format == Format::text) {
        std::ostringstream os;
        os.precision(17);
        os << "p(stripe " << config.width << ") = " << p << "\n";
        return os.str();
      }
      return render(Json{{"width", config.width}, {"p", p}});
    }
    case Command::mk: {
      SolveOptions solve;
      solve.max_nodes = config.max_nodes;
      const MkResult r = solve_mk(find_graph(config.graph), config.k, solve);
      if (format == Format::text) {
        std::string witness;
        for (ColorIndex c : r.witness) witness += (witness.empty() ? "" : " ") + std::to_string(c);
        return format_fraction(r) + "\nwitness: " + witness + "\n";
      }
      Json j = to_json(r);
      j["graph"] = config.graph;
      j["k"] = config.k;
      return render(j);
    }
    case Command::bounds: {
      const BoundsReport r =
          assemble_bounds(config.k, config.grid_period, config.grid_cells, config.samples, seed, parallel);
      if (format == Format::csv) {
        std::ostringstream os;
        os.precision(17);
        os << "parameter,p_hat,stderr\n";
        os << "lower," << r.lower.value.value() << ",0\n";
        os << "upper_realization," << r.upper.realization.p_hat << "," << r.upper.realization.std_error << "\n";
        os << "upper_ensemble," << r.upper.ensemble.p_hat << "," << r.upper.ensemble.std_error << "\n";
        return os.str();
      }
      if (format == Format::text) {
        return "k = " + std::to_string(r.k) + ": " + r.lower.value.str() + " (" + r.lower.witness +
               ") <= inf p <= " + text_estimate(r.upper.realization) + "\n";
      }
      return render(to_json(r));
    }
    case Command::table: {
      const ColoringPtr coloring = parse_coloring(config.coloring);
      const Rect table(config.table_half_width);
      const Estimate e = estimate_p_table(*coloring, table, config.samples, seed, parallel);
      if (format == Format::text) return text_estimate(e) + "\n";
      return render(Json{{"coloring", coloring->describe()},
                         {"R", config.table_half_width},
                         {"estimate", to_json(e)},
                         {"gap_bound", table_bound_gap(table)},
                         {"gap_envelope", table_gap_envelope(config.table_half_width)}});
    }
    case Command::optimize: {
      const OptimizationResult r =
          optimize_hex_edge(config.s_min, config.s_max, config.budget, config.samples, seed, parallel);
      if (!config.csv_path.empty()) write_sweep_csv(r.trace, config.csv_path);
      if (format == Format::csv) {
        std::ostringstream os;
        write_sweep_csv(r.trace, os);
        return os.str();
      }
      Json j = to_json(r);
      try {
        j["min_edges_non_3_colorable"] = min_edges_non_k_colorable(r.best_estimate);
      } catch (const NoInformation&) {
        j["min_edges_non_3_colorable"] = nullptr;
      }
      if (format == Format::text) {
        std::ostringstream os;
        os.precision(6);
        os << "s* = " << r.best_parameter << ", " << text_estimate(r.best_estimate) << "\n";
        return os.str();
      }
      return render(j);
    }
    case Command::hyperdim: {
      Json j{{"dimension", config.dimension}};
      if (config.simplex_k > 0) {
        const Rational b = simplex_bound(config.simplex_k);
        j["simplex_bound"] = {{"k", config.simplex_k}, {"value", b.str()}, {"decimal", b.value()}};
      }
      if (config.width > 0.0 || config.constant) {
        std::unique_ptr<ColoringD> coloring;
        if (config.constant) {
          coloring = std::make_unique<ConstantColoringD>(config.dimension);
        } else {
          coloring = std::make_unique<SlabColoring>(config.dimension, config.width, config.axis);
        }
        j["coloring"] = config.constant ? "constant" : "slab:" + std::to_string(config.width);
        j["needle"] = to_json(estimate_p_per_d(*coloring, config.samples, seed, parallel));
        if (!config.graph.empty()) {
          j["graph"] = config.graph;
          j["graph_throw"] = to_json(estimate_graph_throw_d(*coloring, resolve_graph_d(config.graph, config.dimension),
                                                            config.samples, seed, parallel));
        }
      }
      return render(j);
    }
    case Command::none:
      break;
  }
  throw InvalidArgument("no command given");
}

}  // namespace

void validate(const RunConfig& config) {
  require(config.samples >= 1, "--n must be at least 1");
  require(config.threads >= 0, "--threads must be non-negative");
  switch (config.command) {
    case Command::none:
      throw InvalidArgument("no command given; see --help");
    case Command::estimate:
    case Command::table:
      require(!config.coloring.empty(), "--coloring is required");
      break;
    case Command::exact:
      require(config.width > 0.0, "--width must be positive");
      break;
    case Command::mk:
      require(!config.graph.empty(), "--graph is required");
      require(config.k >= 1, "--k must be at least 1");
      break;
    case Command::bounds:
      require(config.k >= 1, "--k must be at least 1");
      break;
    case Command::optimize:
      require(config.s_min > 0.0 && config.s_max > config.s_min, "need 0 < --smin < --smax");
      require(config.budget >= 3, "--budget must be at least 3");
      break;
    case Command::hyperdim:
      require(config.dimension >= 2 && config.dimension <= kMaxDimension, "--d must be in [2, 6]");
      require(config.simplex_k > 0 || config.width > 0.0 || config.constant,
              "give --simplex-k, --width or --constant");
      break;
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    const std::uint64_t seed = resolve_seed(config);
    write_report(config, out, run_command(config, seed));
    return kExitOk;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResourceLimit;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << "\n";
    return kExitFailure;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  std::string format;

  CLI::App app{"Monochromatic needle probabilities for colorings of the plane"};
  app.set_config("--config", "", "Read options from a TOML/INI file; command-line flags take precedence");
  app.require_subcommand(1);
  app.footer("Colorings: " + join(coloring_kinds()) + "\nGraphs: " + join(catalog_names()) +
             ", file:<path>\nExit codes: 0 ok, 2 validation error, 3 resource limit");

  auto common = [&](CLI::App* sub, bool sampling) {
    if (sampling) {
      sub->add_option("--n", config.samples, "Monte Carlo sample count")->capture_default_str();
      sub->add_option("--seed", config.seed, "RNG seed (default: derived from the clock, echoed in the report)");
      sub->add_option("--threads", config.threads, "Worker threads (0 = all cores)")->capture_default_str();
    }
    sub->add_option("--output,-o", config.output, "Write the report to this file instead of stdout");
    sub->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  };

  auto* estimate = app.add_subcommand("estimate", "Estimate p^per of a periodic coloring (optionally by throwing a graph)");
  estimate->add_option("--coloring", config.coloring, "Coloring spec")->required();
  estimate->add_option("--graph", config.graph, "Throw this unit-distance graph instead of single needles");
  estimate->add_flag("--joint", config.joint, "Also report the joint color distribution");
  common(estimate, true);
  estimate->callback([&] { config.command = Command::estimate; });

  auto* exact = app.add_subcommand("exact", "Exact p^per of the stripe coloring by quadrature");
  exact->add_option("--width", config.width, "Stripe width")->required();
  common(exact, false);
  exact->callback([&] { config.command = Command::exact; });

  auto* mk = app.add_subcommand("mk", "Exact minimum monochromatic edge fraction m_k of a graph");
  mk->add_option("--graph", config.graph, "Catalog name or file:<path>")->required();
  mk->add_option("--k", config.k, "Number of colors")->required();
  mk->add_option("--max-nodes", config.max_nodes, "Branch-and-bound node budget")->capture_default_str();
  common(mk, false);
  mk->callback([&] { config.command = Command::mk; });

  auto* bounds = app.add_subcommand("bounds", "Lower bound from the graph catalog and random-grid upper bound");
  bounds->add_option("--k", config.k, "Number of colors")->required();
  bounds->add_option("--R", config.grid_period, "Grid period")->capture_default_str();
  bounds->add_option("--cells", config.grid_cells, "Grid subdivisions per side")->capture_default_str();
  common(bounds, true);
  bounds->callback([&] { config.command = Command::bounds; });

  auto* table = app.add_subcommand("table", "Estimate p^table on the square table [-R, R]^2");
  table->add_option("--coloring", config.coloring, "Coloring spec")->required();
  table->add_option("--R", config.table_half_width, "Table half-width")->capture_default_str();
  common(table, true);
  table->callback([&] { config.command = Command::table; });

  auto* optimize = app.add_subcommand("optimize", "Sweep and refine the hexagon edge of the hexagonal 3-coloring");
  optimize->add_option("--smin", config.s_min, "Smallest edge length")->capture_default_str();
  optimize->add_option("--smax", config.s_max, "Largest edge length")->capture_default_str();
  optimize->add_option("--budget", config.budget, "Coarse sweep points")->capture_default_str();
  optimize->add_option("--csv", config.csv_path, "Also write the sweep trace as CSV");
  common(optimize, true);
  optimize->callback([&] { config.command = Command::optimize; });

  auto* hyper = app.add_subcommand("hyperdim", "Needle processes and simplex bounds in dimension d");
  hyper->add_option("--d", config.dimension, "Dimension")->capture_default_str();
  hyper->add_option("--width", config.width, "Slab width");
  hyper->add_option("--axis", config.axis, "Slab normal axis")->capture_default_str();
  hyper->add_flag("--constant", config.constant, "Use the single-color coloring");
  hyper->add_option("--graph", config.graph, "simplex, segment or file:<path>");
  hyper->add_option("--simplex-k", config.simplex_k, "Report the simplex bound for k colors");
  common(hyper, true);
  hyper->callback([&] { config.command = Command::hyperdim; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }
  if (format == "json") config.format = Format::json;
  if (format == "csv") config.format = Format::csv;
  if (format == "text") config.format = Format::text;
  return run(config, out, err);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"mononeedle"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace mononeedle::cli
