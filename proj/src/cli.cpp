#include "distdist/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "distdist/bounds.hpp"
#include "distdist/circle_framework.hpp"
#include "distdist/distance.hpp"
#include "distdist/error.hpp"
#include "distdist/generators.hpp"
#include "distdist/line_framework.hpp"
#include "distdist/parallel.hpp"
#include "distdist/pointset_io.hpp"
#include "distdist/rng.hpp"

namespace distdist::cli {
namespace {

using nlohmann::json;

constexpr std::size_t kConcyclicGuard = 600;

json point_json(const ExactPoint& p) { return json::array({p.x.to_string(), p.y.to_string()}); }

json envelope_json(const bounds::BoundEnvelope& e, std::uint64_t measured) {
  return {{"m", e.m},
          {"N", e.n_curves},
          {"k", e.k},
          {"t", e.t},
          {"leading", e.leading.hi},
          {"point_term", e.point_term.hi},
          {"curve_term", e.curve_term.hi},
          {"total", e.total.hi},
          {"ratio", static_cast<double>(measured) / e.total.lo}};
}

json stats_json(const QuadrupleStats& s) {
  return {{"q_total", s.q_total},
          {"D_cross", s.distance_count()},
          {"cauchy_schwarz_lower", s.cauchy_schwarz_lower.to_string()},
          {"cauchy_schwarz_holds", s.cauchy_schwarz_holds()}};
}

void warn_forced(std::ostream& err, const std::string& what) {
  err << "warning: --force overrides the size guard on " << what << "\n";
}

// Explicit enumeration against the counted statistics.
json enumeration_json(const QuadrupleStats& counted, const QuadrupleStats& listed) {
  if (counted.q_total != listed.q_total || counted.q1 != listed.q1 || counted.q2 != listed.q2) {
    throw InvariantViolation("enumerated quadruples disagree with the counted ones");
  }
  return {{"q_total", listed.q_total}, {"q1", listed.q1}, {"q2", listed.q2}, {"matches", true}};
}

bool guard_exceeded(const PointSet& p1, const PointSet& p2) {
  return static_cast<std::uint64_t>(p1.size()) * p2.size() > kEnumerationGuard;
}

std::string format_double(double v) {
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

// Four tuples (p, q, p', q') of off-axis points with |p| != |q| and
// |p'| != |q'|; a quarter are equal pairs, a quarter scaled copies.
struct SameCurveTally {
  std::uint64_t checked = 0;
  std::uint64_t equal_pairs = 0;
  std::uint64_t violations = 0;
};

ExactPoint random_off_axis(Rng& rng) {
  for (;;) {
    ExactPoint p{rng.rational(4, 2), rng.rational(4, 2)};
    if (!p.on_axis()) return p;
  }
}

SameCurveTally same_curve_suite(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  SameCurveTally tally;
  while (tally.checked < count) {
    const ExactPoint p = random_off_axis(rng);
    const ExactPoint q = random_off_axis(rng);
    if (p.norm2() == q.norm2()) continue;
    ExactPoint p2, q2;
    switch (rng.below(4)) {
      case 0:
        p2 = p;
        q2 = q;
        break;
      case 1: {
        const Rational l(rng.between(-4, 4), rng.between(1, 3));
        if (l.is_zero()) continue;
        p2 = {p.x * l, p.y * l};
        q2 = {q.x * l, q.y * l};
        break;
      }
      case 2: {
        const Rational l(rng.between(-4, 4), rng.between(1, 3));
        if (l.is_zero()) continue;
        p2 = {p.x * l, p.y * l};
        q2 = random_off_axis(rng);
        break;
      }
      default:
        p2 = random_off_axis(rng);
        q2 = random_off_axis(rng);
    }
    if (p2.norm2() == q2.norm2()) continue;
    const bool same = p == p2 && q == q2;
    ++tally.checked;
    if (same) ++tally.equal_pairs;
    if (circle::same_curve_conditions_check(p, q, p2, q2) != same) ++tally.violations;
  }
  return tally;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

bool report_consistent(const json& j) { return !j.contains("consistent") || j["consistent"].get<bool>(); }

}  // namespace

std::pair<std::size_t, std::size_t> parse_dims(const std::string& text) {
  const auto x = text.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    const auto w = std::stoul(text.substr(0, x), &used);
    if (used != x) throw std::invalid_argument(text);
    const auto h = std::stoul(text.substr(x + 1), &used);
    if (used != text.size() - x - 1) throw std::invalid_argument(text);
    return {w, h};
  } catch (const std::logic_error&) {
    throw InputError("expected WxH, got '" + text + "'");
  }
}

std::pair<std::size_t, std::size_t> parse_n_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const auto n = std::stoul(text);
      return {n, n};
    }
    const auto lo = std::stoul(text.substr(0, colon));
    const auto hi = std::stoul(text.substr(colon + 1));
    if (lo < 2 || hi < lo) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw InputError("expected lo:hi with 2 <= lo <= hi, got '" + text + "'");
  }
}

std::vector<double> parse_alpha_range(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  try {
    while (std::getline(ss, item, ':')) parts.push_back(std::stod(item));
  } catch (const std::logic_error&) {
    throw InputError("expected a:b:step, got '" + text + "'");
  }
  if (parts.size() == 1) return parts;
  if (parts.size() != 3 || !(parts[2] > 0) || parts[1] < parts[0]) {
    throw InputError("expected a:b:step with a <= b and step > 0, got '" + text + "'");
  }
  std::vector<double> out;
  const auto steps = static_cast<std::size_t>(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9));
  for (std::size_t i = 0; i <= steps; ++i) out.push_back(parts[0] + static_cast<double>(i) * parts[2]);
  return out;
}

json analyze_report(const PointSet& p, bool force, std::ostream& err) {
  if (p.size() > kConcyclicGuard) {
    if (!force) {
      throw SizeGuardError("max_concyclic refused: n = " + std::to_string(p.size()) + " exceeds " +
                           std::to_string(kConcyclicGuard));
    }
    warn_forced(err, "max_concyclic");
  }
  const auto r = analysis::heavy_curves(p, true);
  json j = {{"n", r.n},
            {"D", r.distinct},
            {"heavy_line",
             {{"count", r.best_line.count}, {"exponent", r.line_exponent}, {"line", r.best_line.line.to_string()}}}};
  if (r.best_circle) {
    j["heavy_circle"] = {{"count", r.best_circle->count},
                         {"exponent", *r.circle_exponent},
                         {"center", point_json(r.best_circle->circle.center)},
                         {"radius2", r.best_circle->circle.radius2.to_string()}};
  } else {
    j["heavy_circle"] = nullptr;
  }
  return j;
}

json line_report(const PointSet& p1, const PointSet& p2, const LineOptions& options, std::ostream& err) {
  const line::LineAnalysis a = line::analyze_line_split(p1, p2);
  std::vector<ExactPoint> all(p1.begin(), p1.end());
  all.insert(all.end(), p2.begin(), p2.end());
  const PointSet joined(std::move(all));

  json j;
  j["n"] = a.n;
  j["p1"] = a.p1_size;
  j["p2"] = a.p2_size;
  j["alpha"] = a.alpha;
  j["D"] = analysis::distinct_distances(joined);
  j.update(stats_json(a.stats));
  j["q1"] = a.stats.q1;
  j["q2"] = a.stats.q2;
  j["incidences"] = a.incidences;
  j["gamma_size"] = a.gamma_size;
  j["classes"] = a.class_count;
  j["skipped_degenerate"] = a.skipped_degenerate;
  j["t"] = a.multiplicity.t;
  j["v_max"] = a.multiplicity.v_max;
  j["vertical_x"] = a.multiplicity.vertical_x ? json(a.multiplicity.vertical_x->to_string()) : json(nullptr);
  j["multiplicity_holds"] = a.multiplicity.holds;
  j["enr"] = {{"A", a.enr.a_size},
              {"B", a.enr.b_size},
              {"difference", a.enr.difference_size},
              {"square_sum", a.enr.square_sum_size},
              {"product", a.enr.product},
              {"max", a.enr.max},
              {"rhs", a.enr.rhs},
              {"ratio", a.enr.ratio}};
  const std::uint64_t m = static_cast<std::uint64_t>(p1.size()) * p1.size();
  if (a.gamma_size > 0) {
    j["envelope"] = envelope_json(bounds::envelope_mult(m, a.gamma_size, 3, std::max<std::uint64_t>(1, a.multiplicity.t)),
                                  a.incidences);
  } else {
    j["envelope"] = nullptr;
  }
  if (options.enumerate) {
    if (options.force && guard_exceeded(p1, p2)) warn_forced(err, "quadruple enumeration");
    j["enumeration"] = enumeration_json(a.stats, line::enumerate_quadruples(p1, p2, options.force));
  }
  if (options.dump_curves) {
    const auto family = line::build_hyperbola_family(p2);
    json curves = json::array();
    for (const auto& cls : family.classes) {
      curves.push_back({{"p", point_json(cls.p)},
                        {"q", point_json(cls.q)},
                        {"multiplicity", cls.multiplicity},
                        {"polynomial", cls.curve().polynomial().to_string()}});
    }
    j["curves"] = std::move(curves);
  }
  j["consistent"] = a.consistent();
  return j;
}

json circle_report(const PointSet& p1, const PointSet& p2, const CircleOptions& options, std::ostream& err) {
  const circle::CircleAnalysis a = circle::analyze_circle_split(p1, p2);
  std::vector<ExactPoint> all(p1.begin(), p1.end());
  all.insert(all.end(), p2.begin(), p2.end());
  const PointSet joined(std::move(all));

  json j;
  j["n"] = a.n;
  j["p1"] = a.p1_size;
  j["p2"] = a.p2_size;
  j["alpha"] = a.alpha;
  j["D"] = analysis::distinct_distances(joined);
  j.update(stats_json(a.stats));
  j["q1_concentric"] = a.stats.q1;
  j["q2"] = a.stats.q2;
  j["incidences"] = a.incidences;
  j["gamma_size"] = a.gamma_size;
  j["skipped_concentric"] = a.skipped_concentric;
  const std::uint64_t m = static_cast<std::uint64_t>(p1.size()) * p1.size();
  j["envelope"] = a.gamma_size > 0 ? envelope_json(bounds::envelope_ps(m, a.gamma_size, 4), a.incidences) : json(nullptr);
  if (options.enumerate) {
    if (options.force && guard_exceeded(p1, p2)) warn_forced(err, "quadruple enumeration");
    j["enumeration"] = enumeration_json(a.stats, circle::enumerate_quadruples_circle(p1, p2, options.force));
  }
  if (options.check_intersections) {
    const auto r = circle::four_point_check(circle::build_circle_family(p2), 200, 500, 50, options.seed);
    j["intersections"] = {{"pairs", r.pairs_checked},
                    {"engineered", r.engineered_pairs},
                    {"singular", r.singular_pairs},
                    {"exhaustive", r.exhaustive},
                    {"max_count", r.max_count},
                    {"max_complex_count", r.max_complex_count},
                    {"histogram", r.histogram},
                    {"violations", r.violations}};
  }
  bool consistent = a.consistent();
  if (options.check_intersections && j["intersections"]["violations"].get<std::uint64_t>() > 0) consistent = false;
  j["consistent"] = consistent;
  return j;
}

const std::vector<std::string>& sweep_columns() {
  static const std::vector<std::string> columns = {
      "mode", "n", "alpha", "p1", "p2", "D", "D_cross", "q_total", "q1", "q2", "incidences",
      "gamma_size", "t", "env_leading", "env_point", "env_curve", "env_total", "ratio"};
  return columns;
}

std::string sweep_csv(const SweepOptions& options) {
  if (options.mode != "line" && options.mode != "circle") throw InputError("--mode must be line or circle");
  if (options.alphas.empty()) throw InputError("sweep needs at least one alpha");
  struct Cell {
    std::size_t n;
    double alpha;
  };
  std::vector<Cell> cells;
  for (std::size_t n = options.n_lo; n <= options.n_hi; n *= 2) {
    for (double alpha : options.alphas) cells.push_back({n, alpha});
  }
  const bool line_mode = options.mode == "line";
  auto rows = map_chunks<std::vector<std::string>>(
      cells.size(),
      [&](std::size_t lo, std::size_t hi) {
        std::vector<std::string> out;
        for (std::size_t c = lo; c < hi; ++c) {
          const auto [n, alpha] = cells[c];
          PointSet p1, p2;
          if (line_mode) {
            const auto split = gen::split_on_x_axis(gen::uneven_lattice(n, alpha));
            p1 = split.primary();
            p2 = split.ambient();
          } else {
            const auto split = gen::random_circle_split(n, alpha, options.seed + c);
            p1 = split.primary();
            p2 = split.ambient();
          }
          std::ostringstream null_stream;
          const json r = line_mode ? line_report(p1, p2, {}, null_stream) : circle_report(p1, p2, {}, null_stream);
          if (!r["consistent"].get<bool>()) {
            throw InvariantViolation("sweep cell n=" + std::to_string(n) + " alpha=" + format_double(alpha) +
                                     " failed the q2 = incidences cross-check");
          }
          std::ostringstream row;
          row << options.mode << ',' << r["n"] << ',' << format_double(alpha) << ',' << r["p1"] << ',' << r["p2"]
              << ',' << r["D"] << ',' << r["D_cross"] << ',' << r["q_total"] << ','
              << (line_mode ? r["q1"] : r["q1_concentric"]) << ',' << r["q2"] << ',' << r["incidences"] << ','
              << r["gamma_size"] << ',' << (line_mode ? r["t"] : json(1));
          const json& e = r["envelope"];
          if (e.is_null()) {
            row << ",,,,,";
          } else {
            row << ',' << format_double(e["leading"]) << ',' << format_double(e["point_term"]) << ','
                << format_double(e["curve_term"]) << ',' << format_double(e["total"]) << ','
                << format_double(e["ratio"]);
          }
          out.push_back(row.str());
        }
        return out;
      },
      cells.size());
  std::string csv;
  const auto& cols = sweep_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) csv += (i ? "," : "") + cols[i];
  csv += "\n";
  for (const auto& chunk : rows) {
    for (const auto& row : chunk) csv += row + "\n";
  }
  return csv;
}

json check_report(std::uint64_t seed) {
  json suites = json::object();
  bool ok = true;
  auto record = [&](const std::string& name, json body) {
    if (body["violations"].get<std::uint64_t>() > 0) ok = false;
    suites[name] = std::move(body);
  };

  std::uint64_t line_triples = 0, line_violations = 0, line_max = 0;
  std::uint64_t circle_triples = 0, circle_violations = 0, circle_max = 0;
  std::uint64_t mult_configs = 0, mult_violations = 0, mult_max_t = 0;
  line::DegreesOfFreedomReport dof_total;
  circle::FourPointReport four_total;
  for (std::uint64_t i = 0; i < 6; ++i) {
    const auto ls = gen::random_line_split(40 + 20 * i, 0.5 + 0.05 * static_cast<double>(i), seed + i);
    const PointSet lp1 = ls.primary(), lp2 = ls.ambient();
    const auto lc = line::q1_choice_bound_check(lp1, lp2);
    line_triples += lc.triples;
    line_violations += lc.violations;
    line_max = std::max<std::uint64_t>(line_max, lc.max_completions);

    const auto family = line::build_hyperbola_family(lp2);
    const auto mult = line::multiplicity_vs_vertical_lines(lp2, family);
    ++mult_configs;
    if (!mult.holds) ++mult_violations;
    mult_max_t = std::max(mult_max_t, mult.t);

    const auto dof = line::degrees_of_freedom_check_line(family, 200, 2000, seed + i);
    dof_total.pairs_checked += dof.pairs_checked;
    dof_total.violations += dof.violations;
    dof_total.max_count = std::max(dof_total.max_count, dof.max_count);

    const auto cs = gen::random_circle_split(30 + 10 * i, 0.6, seed + i);
    const PointSet cp1 = cs.primary(), cp2 = cs.ambient();
    const auto cc = circle::q1_choice_bound_check_circle(cp1, cp2);
    circle_triples += cc.triples;
    circle_violations += cc.violations;
    circle_max = std::max<std::uint64_t>(circle_max, cc.max_completions);

    const auto fp = circle::four_point_check(circle::build_circle_family(cp2), 200, 200, 20, seed + i);
    four_total.pairs_checked += fp.pairs_checked;
    four_total.engineered_pairs += fp.engineered_pairs;
    four_total.singular_pairs += fp.singular_pairs;
    four_total.violations += fp.violations;
    four_total.max_count = std::max(four_total.max_count, fp.max_count);
    four_total.max_complex_count = std::max(four_total.max_complex_count, fp.max_complex_count);
  }
  record("q1_choice_line", {{"bound", 4}, {"triples", line_triples}, {"max", line_max}, {"violations", line_violations}});
  record("q1_choice_circle",
         {{"bound", 2}, {"triples", circle_triples}, {"max", circle_max}, {"violations", circle_violations}});
  record("hyperbola_intersections", {{"bound", 2},
                                     {"pairs", dof_total.pairs_checked},
                                     {"max", dof_total.max_count},
                                     {"violations", dof_total.violations}});
  record("intersections_4d", {{"bound", 4},
                              {"pairs", four_total.pairs_checked},
                              {"engineered", four_total.engineered_pairs},
                              {"singular", four_total.singular_pairs},
                              {"max", four_total.max_count},
                              {"max_complex", four_total.max_complex_count},
                              {"violations", four_total.violations}});
  const auto sc = same_curve_suite(seed, 1000);
  record("same_curve_conditions",
         {{"tuples", sc.checked}, {"equal_pairs", sc.equal_pairs}, {"violations", sc.violations}});
  record("multiplicity_vs_vertical",
         {{"configurations", mult_configs}, {"max_t", mult_max_t}, {"violations", mult_violations}});
  return {{"seed", seed}, {"suites", std::move(suites)}, {"consistent", ok}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact distinct-distance experiments on rich lines and circles", "distdist"};
  app.require_subcommand(1);

  std::string input, lattice, out_path, csv_path, alpha_text, n_text = "64:1024", mode = "line";
  std::size_t row = 0, n = 0;
  double alpha = 0.5;
  std::uint64_t seed = 1;
  bool force = false, dump_curves = false, enumerate = false, intersections = false;

  auto* analyze = app.add_subcommand("analyze", "distinct distances and the richest line and circle");
  analyze->add_option("--input", input, "point set (.json or .csv)");
  analyze->add_option("--lattice", lattice, "WxH integer lattice");
  analyze->add_flag("--force", force, "override the size guard");
  analyze->add_option("--out", out_path, "write the report here");

  auto* line_cmd = app.add_subcommand("line", "quadruple ledger for points on the x-axis against the rest");
  line_cmd->add_option("--input", input, "point set; P1 is the part on the x-axis");
  line_cmd->add_option("--lattice", lattice, "WxH integer lattice");
  line_cmd->add_option("--row", row, "lattice row used as P1");
  line_cmd->add_option("--n", n, "generated configuration size");
  line_cmd->add_option("--alpha", alpha, "P1 has about n^alpha points");
  auto* line_seed = line_cmd->add_option("--seed", seed, "random split instead of the uneven lattice");
  line_cmd->add_flag("--dump-curves", dump_curves, "list the hyperbola classes");
  line_cmd->add_flag("--enumerate", enumerate, "cross-check by explicit enumeration");
  line_cmd->add_flag("--force", force, "override the size guard");
  line_cmd->add_option("--out", out_path, "write the report here");

  auto* circle_cmd = app.add_subcommand("circle", "quadruple ledger for points on the unit circle against the rest");
  circle_cmd->add_option("--input", input, "point set; P1 is the part on the unit circle");
  circle_cmd->add_option("--n", n, "generated configuration size");
  circle_cmd->add_option("--alpha", alpha, "P1 has about n^alpha points");
  circle_cmd->add_option("--seed", seed, "generator and oracle seed");
  circle_cmd->add_flag("--check-lemma41", intersections, "run the pairwise intersection oracle");
  circle_cmd->add_flag("--enumerate", enumerate, "cross-check by explicit enumeration");
  circle_cmd->add_flag("--force", force, "override the size guard");
  circle_cmd->add_option("--out", out_path, "write the report here");

  auto* sweep = app.add_subcommand("sweep", "one CSV row per (n, alpha)");
  sweep->add_option("--mode", mode, "line or circle");
  sweep->add_option("--alpha", alpha_text, "a:b:step")->required();
  sweep->add_option("--n", n_text, "lo:hi, doubling");
  sweep->add_option("--seed", seed, "generator seed (circle mode)");
  sweep->add_option("--csv", csv_path, "write the CSV here");

  auto* check = app.add_subcommand("check", "run the invariant suites");
  check->add_option("--seed", seed, "generator seed");
  check->add_option("--out", out_path, "write the report here");

  std::vector<std::string> argv_store{"distdist"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    json report;
    if (analyze->parsed()) {
      if (input.empty() == lattice.empty()) throw InputError("analyze needs exactly one of --input, --lattice");
      PointSet p;
      if (!input.empty()) {
        p = io::read_pointset(input);
      } else {
        const auto [w, h] = parse_dims(lattice);
        p = gen::lattice(w, h);
      }
      report = analyze_report(p, force, err);
      report["config"] = {{"mode", "analyze"}, {"input", input}, {"lattice", lattice}, {"force", force}};
    } else if (line_cmd->parsed()) {
      const int sources = !input.empty() + !lattice.empty() + (n > 0);
      if (sources != 1) throw InputError("line needs exactly one of --input, --lattice, --n");
      PointSet all;
      json config = {{"mode", "line"}};
      if (!input.empty()) {
        all = io::read_pointset(input);
        config["input"] = input;
      } else if (!lattice.empty()) {
        const auto [w, h] = parse_dims(lattice);
        if (row >= h) throw InputError("--row " + std::to_string(row) + " is outside the lattice");
        all = gen::translate(gen::lattice(w, h), Rational(0), Rational(-static_cast<std::int64_t>(row)));
        config["lattice"] = lattice;
        config["row"] = row;
      } else if (line_seed->count() > 0) {
        all = gen::random_line_split(n, alpha, seed).all;
        config.update({{"n", n}, {"alpha", alpha}, {"seed", seed}, {"generator", "random"}});
      } else {
        all = gen::uneven_lattice(n, alpha);
        config.update({{"n", n}, {"alpha", alpha}, {"generator", "uneven_lattice"}});
      }
      config.update({{"dump_curves", dump_curves}, {"enumerate", enumerate}, {"force", force}});
      const auto split = gen::split_on_x_axis(all);
      report = line_report(split.primary(), split.ambient(), {dump_curves, enumerate, force}, err);
      report["config"] = std::move(config);
    } else if (circle_cmd->parsed()) {
      if (input.empty() == (n == 0)) throw InputError("circle needs exactly one of --input, --n");
      PointSet all;
      json config = {{"mode", "circle"}, {"seed", seed}};
      if (!input.empty()) {
        all = io::read_pointset(input);
        config["input"] = input;
      } else {
        all = gen::random_circle_split(n, alpha, seed).all;
        config.update({{"n", n}, {"alpha", alpha}, {"generator", "random"}});
      }
      config.update({{"check_intersections", intersections}, {"enumerate", enumerate}, {"force", force}});
      const auto split = gen::split_on_unit_circle(all);
      report = circle_report(split.primary(), split.ambient(), {intersections, seed, enumerate, force}, err);
      report["config"] = std::move(config);
    } else if (sweep->parsed()) {
      SweepOptions options;
      options.mode = mode;
      options.alphas = parse_alpha_range(alpha_text);
      std::tie(options.n_lo, options.n_hi) = parse_n_range(n_text);
      options.seed = seed;
      emit(sweep_csv(options), csv_path, out);
      return kOk;
    } else {
      report = check_report(seed);
      report["config"] = {{"mode", "check"}, {"seed", seed}};
    }
    emit(dump(report), out_path, out);
    if (!report_consistent(report)) {
      err << "error: invariant violation, see the report\n";
      return kInvariantViolation;
    }
    return kOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvariantViolation& e) {
    err << "error: invariant violation: " << e.what() << "\n";
    return kInvariantViolation;
  } catch (const SizeGuardError& e) {
    err << "error: " << e.what() << " (use --force)\n";
    return kSizeGuard;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace distdist::cli
