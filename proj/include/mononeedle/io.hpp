#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "mononeedle/coloring.hpp"

namespace mononeedle {

struct Estimate;
struct JointDistribution;
struct MkResult;
struct LowerBound;
struct BoundsReport;
struct SweepPoint;
struct OptimizationResult;
class EmbeddedGraph;
class EmbeddedGraphD;

using Json = nlohmann::ordered_json;

// Colorings -----------------------------------------------------------------
//
// {"lattice": {"u": [x, y], "v": [x, y]}, "k": K, "tiles": [{"polygon": [[x, y], ...], "color": c}, ...]}
// {"lattice": {"u": [R, 0], "v": [0, R]}, "k": K, "cells": [[c, ...], ...]}   (cells[row][col], row = y index)
//
// For grids the lattice is optional ("period": R may be given instead).

ColoringPtr coloring_from_json(const Json& doc);
ColoringPtr load_coloring_file(const std::string& path);
Json to_json(const GridColoring& c);
Json to_json(const PolygonalColoring& c);

// Graphs --------------------------------------------------------------------
//
// {"vertices": [[x, y], ...], "edges": [[i, j], ...]}; coordinates may have any
// dimension d as long as every vertex agrees. Edges are stored with i < j.

EmbeddedGraph graph_from_json(const Json& doc);
EmbeddedGraph load_graph_file(const std::string& path);
EmbeddedGraphD graph_d_from_json(const Json& doc);
EmbeddedGraphD load_graph_d_file(const std::string& path);
Json to_json(const EmbeddedGraph& g);
Json to_json(const EmbeddedGraphD& g);

// Reports -------------------------------------------------------------------

/// {p_hat, n, stderr, ci95: [lo, hi], seed, process}; table estimates add draws and acceptance_rate.
Json to_json(const Estimate& e);
Json to_json(const JointDistribution& j);
Json to_json(const MkResult& r);
Json to_json(const LowerBound& b);
Json to_json(const BoundsReport& r);
Json to_json(const SweepPoint& p);
Json to_json(const OptimizationResult& r);

/// "1/11 (0.090909090909090912)"
std::string format_fraction(const MkResult& r);

/// Header `parameter,p_hat,stderr,n,seed`, one row per point, 17 significant digits.
void write_sweep_csv(const std::vector<SweepPoint>& points, std::ostream& out);
void write_sweep_csv(const std::vector<SweepPoint>& points, const std::string& path);
std::vector<SweepPoint> read_sweep_csv(std::istream& in);

Json read_json_file(const std::string& path);

}  // namespace mononeedle
