#include "distdist/line_framework.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "distdist/distance.hpp"
#include "distdist/error.hpp"
#include "distdist/exact/sturm.hpp"
#include "distdist/parallel.hpp"
#include "distdist/rng.hpp"

namespace distdist::line {
namespace {

using exact::BiPoly;
using exact::Var;

struct RationalPair {
  Rational first;
  Rational second;
  friend bool operator==(const RationalPair&, const RationalPair&) = default;
};

struct RationalPairHash {
  std::size_t operator()(const RationalPair& k) const noexcept { return k.first.hash() * 0x9e3779b97f4a7c15ULL ^ k.second.hash(); }
};

}  // namespace

void validate_split(const PointSet& p1, const PointSet& p2) {
  if (p1.empty() || p2.empty()) throw InputError("line split needs nonempty P1 and P2");
  for (const auto& a : p1) {
    if (!a.y.is_zero()) throw InputError("misplaced point: " + a.to_string() + " in P1 is off the x-axis");
  }
  for (const auto& p : p2) {
    if (p.y.is_zero()) throw InputError("misplaced point: " + p.to_string() + " in P2 lies on the x-axis");
  }
}

Rational slice_key(const ExactPoint& p) { return p.y * p.y; }

QuadrupleStats build_quadruple_stats(const PointSet& p1, const PointSet& p2) {
  validate_split(p1, p2);
  return quadruple_stats(analysis::bipartite_distances(p1, p2), slice_key);
}

QuadrupleStats enumerate_quadruples(const PointSet& p1, const PointSet& p2, bool force) {
  validate_split(p1, p2);
  if (!force && static_cast<std::uint64_t>(p1.size()) * p2.size() > kEnumerationGuard) {
    throw SizeGuardError("quadruple enumeration refused: |P1|*|P2| = " + std::to_string(p1.size() * p2.size()) +
                         " exceeds " + std::to_string(kEnumerationGuard));
  }
  return enumerate_quadruple_stats(analysis::bipartite_distances(p1, p2), slice_key);
}

ChoiceBoundReport q1_choice_bound_check(const PointSet& p1, const PointSet& p2) {
  validate_split(p1, p2);
  ChoiceBoundReport report;
  report.bound = 4;
  std::unordered_map<RationalPair, std::uint64_t, RationalPairHash> completions;
  for (const auto& b : p1) {
    completions.clear();
    for (const auto& q : p2) ++completions[{slice_key(q), squared_distance(b, q)}];
    for (const auto& a : p1) {
      for (const auto& p : p2) {
        auto it = completions.find({slice_key(p), squared_distance(a, p)});
        std::uint64_t c = it == completions.end() ? 0 : it->second;
        // q = p always matches when a = b; that quadruple has ap = bq.
        if (a == b) --c;
        ++report.triples;
        if (c > report.bound) ++report.violations;
        if (!report.witness || c > report.max_completions) {
          report.max_completions = c;
          report.witness = ChoiceWitness{a, b, p};
        }
      }
    }
  }
  return report;
}

HyperbolaCurve::HyperbolaCurve(ExactPoint p, ExactPoint q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_.y * p_.y == q_.y * q_.y) {
    throw InputError("hyperbola for " + p_.to_string() + ", " + q_.to_string() + " degenerates (p_y^2 = q_y^2)");
  }
}

BiPoly HyperbolaCurve::polynomial() const {
  BiPoly dx = BiPoly::x() - BiPoly::constant(p_.x);
  BiPoly dy = BiPoly::y() - BiPoly::constant(q_.x);
  return dx * dx + BiPoly::constant(p_.y * p_.y) - dy * dy - BiPoly::constant(q_.y * q_.y);
}

bool HyperbolaCurve::contains(const Rational& x, const Rational& y) const {
  Rational dx = x - p_.x;
  Rational dy = y - q_.x;
  return dx * dx + p_.y * p_.y == dy * dy + q_.y * q_.y;
}

HyperbolaFamily build_hyperbola_family(const PointSet& p2) {
  for (const auto& p : p2) {
    if (p.y.is_zero()) throw InputError("misplaced point: " + p.to_string() + " in P2 lies on the x-axis");
  }
  HyperbolaFamily family;
  std::unordered_map<HyperbolaKey, std::size_t, HyperbolaKeyHash> index;
  for (const auto& p : p2) {
    const Rational py2 = p.y * p.y;
    for (const auto& q : p2) {
      if (p == q) continue;
      Rational gap = q.y * q.y - py2;
      if (gap.is_zero()) {
        ++family.skipped_degenerate;
        continue;
      }
      HyperbolaKey key{p.x, q.x, std::move(gap)};
      auto [it, inserted] = index.try_emplace(key, family.classes.size());
      if (inserted) family.classes.push_back({std::move(key), p, q, 0});
      auto& cls = family.classes[it->second];
      ++cls.multiplicity;
      ++family.gamma_size;
      family.max_multiplicity = std::max(family.max_multiplicity, cls.multiplicity);
    }
  }
  return family;
}

std::vector<Rational> axis_coordinates(const PointSet& p1) {
  std::vector<Rational> xs;
  xs.reserve(p1.size());
  for (const auto& a : p1) xs.push_back(a.x);
  return xs;
}

std::uint64_t count_incidences_line(const std::vector<Rational>& axis, const HyperbolaFamily& family) {
  // For each q_x: how many b in the axis set give each value of (b - q_x)^2.
  std::map<Rational, std::unordered_map<Rational, std::uint64_t>> by_qx;
  for (const auto& cls : family.classes) {
    auto [it, inserted] = by_qx.try_emplace(cls.key.qx);
    if (!inserted) continue;
    for (const auto& b : axis) ++it->second[(b - cls.key.qx).square()];
  }
  auto partial = map_chunks<std::uint64_t>(family.classes.size(), [&](std::size_t lo, std::size_t hi) {
    std::uint64_t sum = 0;
    for (std::size_t c = lo; c < hi; ++c) {
      const auto& cls = family.classes[c];
      const auto& squares = by_qx.at(cls.key.qx);
      std::uint64_t hits = 0;
      for (const auto& a : axis) {
        auto it = squares.find((a - cls.key.px).square() - cls.key.gap);
        if (it != squares.end()) hits += it->second;
      }
      sum += hits * cls.multiplicity;
    }
    return sum;
  });
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  return total;
}

IncidenceLedger build_incidence_ledger(const PointSet& p1, const PointSet& p2) {
  validate_split(p1, p2);
  IncidenceLedger ledger;
  ledger.axis = axis_coordinates(p1);
  ledger.family = build_hyperbola_family(p2);
  ledger.incidences = count_incidences_line(ledger.axis, ledger.family);
  return ledger;
}

MultiplicityReport multiplicity_vs_vertical_lines(const PointSet& p2, const HyperbolaFamily& family) {
  MultiplicityReport r;
  r.t = family.max_multiplicity;
  std::map<Rational, std::size_t> columns;
  for (const auto& p : p2) ++columns[p.x];
  for (const auto& [x, count] : columns) {
    if (count > r.v_max) {
      r.v_max = count;
      r.vertical_x = x;
    }
  }
  r.holds = r.t <= 2 * static_cast<std::uint64_t>(r.v_max);
  return r;
}

EnrReport enr_products(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) throw InputError("enr_products needs nonempty A and B");
  std::set<Rational> as(a.begin(), a.end());
  std::set<Rational> bs(b.begin(), b.end());
  std::unordered_set<Rational> diffs;
  std::unordered_set<Rational> sums;
  for (const auto& x : as) {
    for (const auto& y : as) diffs.insert(x - y);
    for (const auto& y : bs) sums.insert(x * x + y * y);
  }
  EnrReport r;
  r.a_size = as.size();
  r.b_size = bs.size();
  r.difference_size = diffs.size();
  r.square_sum_size = sums.size();
  r.product = static_cast<std::uint64_t>(r.difference_size) * r.square_sum_size;
  r.max = std::max(r.difference_size, r.square_sum_size);
  const double na = static_cast<double>(r.a_size);
  r.rhs = std::pow(na, 1.5) * std::sqrt(na * static_cast<double>(r.b_size));
  r.ratio = static_cast<double>(r.product) / r.rhs;
  return r;
}

EnrReport enr_for_split(const PointSet& p1, const PointSet& p2) {
  validate_split(p1, p2);
  std::map<Rational, std::vector<Rational>> columns;
  for (const auto& p : p2) columns[p.x].push_back(p.y);
  auto richest = columns.begin();
  for (auto it = columns.begin(); it != columns.end(); ++it) {
    if (it->second.size() > richest->second.size()) richest = it;
  }
  const Rational& xv = richest->first;
  std::vector<Rational> a;
  a.reserve(p1.size());
  for (const auto& pt : p1) a.push_back(pt.x - xv);
  return enr_products(a, richest->second);
}

std::size_t hyperbola_intersection_count(const HyperbolaCurve& c1, const HyperbolaCurve& c2) {
  const BiPoly f = c1.polynomial();
  const BiPoly g = f - c2.polynomial();
  if (g.is_zero()) throw AlgebraError("hyperbolas coincide: f - f' vanishes identically");
  if (g.total_degree() > 1) throw AlgebraError("difference of two hyperbolas is not linear");
  if (g.total_degree() == 0) return 0;
  // g is a line; each root of the resultant fixes the eliminated coordinate
  // uniquely through g, so distinct roots are distinct intersection points.
  const Var eliminate = g.degree_in(Var::Y) == 1 ? Var::Y : Var::X;
  const exact::UniPoly r = exact::resultant(f, g, eliminate);
  if (r.is_zero()) throw InfiniteIntersection("hyperbola contains the line f - f' = 0");
  if (r.degree() == 0) return 0;
  if (r.degree() == 2) {
    int s = exact::discriminant(r).sign();
    return s > 0 ? 2 : (s == 0 ? 1 : 0);
  }
  return exact::count_real_roots(r);
}

DegreesOfFreedomReport degrees_of_freedom_check_line(const HyperbolaFamily& family, std::size_t exhaustive_limit,
                                                     std::size_t samples, std::uint64_t seed) {
  DegreesOfFreedomReport report;
  const std::size_t c = family.classes.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (c <= exhaustive_limit) {
    report.exhaustive = true;
    for (std::size_t i = 0; i < c; ++i) {
      for (std::size_t j = i + 1; j < c; ++j) pairs.emplace_back(i, j);
    }
  } else {
    Rng rng(seed);
    pairs.reserve(samples);
    while (pairs.size() < samples) {
      std::size_t i = rng.below(c);
      std::size_t j = rng.below(c);
      if (i != j) pairs.emplace_back(i, j);
    }
  }
  auto counts = map_chunks<std::vector<std::size_t>>(pairs.size(), [&](std::size_t lo, std::size_t hi) {
    std::vector<std::size_t> out;
    out.reserve(hi - lo);
    for (std::size_t k = lo; k < hi; ++k) {
      out.push_back(hyperbola_intersection_count(family.classes[pairs[k].first].curve(),
                                                 family.classes[pairs[k].second].curve()));
    }
    return out;
  });
  for (const auto& chunk : counts) {
    for (std::size_t n : chunk) {
      ++report.pairs_checked;
      report.max_count = std::max(report.max_count, n);
      if (n > 2) ++report.violations;
      else ++report.histogram[n];
    }
  }
  return report;
}

LineAnalysis analyze_line_split(const PointSet& p1, const PointSet& p2) {
  validate_split(p1, p2);
  LineAnalysis r;
  r.p1_size = p1.size();
  r.p2_size = p2.size();
  r.n = p1.size() + p2.size();
  r.alpha = analysis::richness_exponent(p1.size(), r.n);
  r.stats = build_quadruple_stats(p1, p2);
  IncidenceLedger ledger = build_incidence_ledger(p1, p2);
  r.incidences = ledger.incidences;
  r.gamma_size = ledger.family.gamma_size;
  r.class_count = ledger.family.classes.size();
  r.skipped_degenerate = ledger.family.skipped_degenerate;
  r.multiplicity = multiplicity_vs_vertical_lines(p2, ledger.family);
  r.enr = enr_for_split(p1, p2);
  return r;
}

}  // namespace distdist::line
