#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mononeedle::cli {

enum class Command { none, estimate, exact, mk, bounds, table, optimize, hyperdim };
enum class Format { json, csv, text };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitResourceLimit = 3;

struct RunConfig {
  Command command = Command::none;
  std::string coloring;
  std::string graph;
  int k = 0;
  std::int64_t samples = 1'000'000;
  /// Unset means timestamp-derived; the chosen seed is always echoed.
  std::optional<std::uint64_t> seed;
  int threads = 0;
  std::string output;
  std::optional<Format> format;

  bool joint = false;
  double width = 0.0;
  double table_half_width = 10.0;
  double grid_period = 8.0;
  int grid_cells = 16;
  double s_min = 0.3;
  double s_max = 1.2;
  int budget = 25;
  std::string csv_path;
  int dimension = 3;
  int axis = 0;
  bool constant = false;
  int simplex_k = 0;
  std::int64_t max_nodes = 100'000'000;
};

/// Validates per-command requirements; throws InvalidArgument.
void validate(const RunConfig& config);

/// Executes the command and writes the report to config.output or `out`. Returns the exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses flags (and an optional --config file; flags win) and runs.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mononeedle::cli
