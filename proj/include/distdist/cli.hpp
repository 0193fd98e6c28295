#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "distdist/point.hpp"

namespace distdist::cli {

// Process exit status contract.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,           // anything not covered below
  kInputError = 2,        // bad flags, unreadable or invalid input
  kInvariantViolation = 3,  // an exact cross-check failed
  kSizeGuard = 4,         // refused by a size guard without --force
};

// Runs one invocation; args excludes the program name. Reports go to `out`
// unless an output path is given, diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// The report builders behind the subcommands. Each returns the JSON
// document that the subcommand writes; none of them carries a timestamp.

nlohmann::json analyze_report(const PointSet& p, bool force, std::ostream& err);

struct LineOptions {
  bool dump_curves = false;
  bool enumerate = false;
  bool force = false;
};

nlohmann::json line_report(const PointSet& p1, const PointSet& p2, const LineOptions& options, std::ostream& err);

struct CircleOptions {
  bool check_intersections = false;
  std::uint64_t seed = 1;
  bool enumerate = false;
  bool force = false;
};

nlohmann::json circle_report(const PointSet& p1, const PointSet& p2, const CircleOptions& options,
                             std::ostream& err);

// One row per (n, alpha) cell, n doubling from n_lo while n <= n_hi.
struct SweepOptions {
  std::string mode = "line";
  std::vector<double> alphas;
  std::size_t n_lo = 64;
  std::size_t n_hi = 1024;
  std::uint64_t seed = 1;
};

// Column order of the sweep CSV; the header line lists exactly these.
const std::vector<std::string>& sweep_columns();
std::string sweep_csv(const SweepOptions& options);

// Lemma suites: choice bounds, hyperbola intersections, 4D intersections,
// same-curve conditions and multiplicity against vertical lines.
nlohmann::json check_report(std::uint64_t seed);

// "a:b:step", inclusive of b up to rounding.
std::vector<double> parse_alpha_range(const std::string& text);
// "WxH".
std::pair<std::size_t, std::size_t> parse_dims(const std::string& text);
// "lo:hi".
std::pair<std::size_t, std::size_t> parse_n_range(const std::string& text);

}  // namespace distdist::cli
