#include "distdist/circle_framework.hpp"

#include <algorithm>
#include <unordered_map>

#include "distdist/distance.hpp"
#include "distdist/error.hpp"
#include "distdist/exact/sturm.hpp"
#include "distdist/parallel.hpp"
#include "distdist/rng.hpp"

namespace distdist::circle {
namespace {

using exact::UniPoly;

bool on_unit_circle(const ExactPoint& a) { return a.norm2() == Rational(1); }

Rational half_offset(const ExactPoint& p, const ExactPoint& q) { return (p.norm2() - q.norm2()) / Rational(2); }

void require_off_axis(const ExactPoint& p) {
  if (p.on_axis()) throw InputError("axis point: " + p.to_string() + " lies on a coordinate axis");
}

struct Vec2 {
  Rational x, y;
};

struct Affine {
  Matrix2 m;
  Vec2 c;
};

// The map b -> M b + c with M = mp^-1 mq and c = mp^-1 offsets.
Affine solve_through(const Matrix2& mp, const Matrix2& mq, const std::array<Rational, 2>& offsets) {
  const Rational inv = mp.det().reciprocal();
  // mp^-1 = inv * [[d, -b], [-c, a]]
  const Matrix2 pinv{mp.d * inv, -mp.b * inv, -mp.c * inv, mp.a * inv};
  Affine t;
  t.m = {pinv.a * mq.a + pinv.b * mq.c, pinv.a * mq.b + pinv.b * mq.d, pinv.c * mq.a + pinv.d * mq.c,
         pinv.c * mq.b + pinv.d * mq.d};
  t.c = {pinv.a * offsets[0] + pinv.b * offsets[1], pinv.c * offsets[0] + pinv.d * offsets[1]};
  return t;
}

// Points b of the conic b_x^2 + b_y^2 = 1 with |T b|^2 = 1. Every point
// except (-1, 0) is ((1 - s^2), 2s) / (1 + s^2) for a unique s != +-i, so the
// count is the roots of the cleared-denominator condition plus that point.
std::size_t count_on_conic(const Affine& t, CountMode mode) {
  const UniPoly w{Rational(1), Rational(0), Rational(1)};
  const UniPoly bx{Rational(1), Rational(0), Rational(-1)};
  const UniPoly by{Rational(0), Rational(2)};
  const UniPoly ax = t.m.a * bx + t.m.b * by + t.c.x * w;
  const UniPoly ay = t.m.c * bx + t.m.d * by + t.c.y * w;
  const UniPoly cond = ax * ax + ay * ay - w * w;
  if (cond.is_zero()) throw InfiniteIntersection("the affine image of the unit circle is the unit circle");

  const Rational ex = t.c.x - t.m.a;
  const Rational ey = t.c.y - t.m.c;
  const std::size_t at_pole = ex * ex + ey * ey == Rational(1) ? 1 : 0;

  if (cond.degree() == 0) return at_pole;
  if (mode == CountMode::Real) return exact::count_real_roots(cond) + at_pole;
  const UniPoly sf = cond.square_free_part();
  return static_cast<std::size_t>(sf.degree() - exact::gcd(sf, w).degree()) + at_pole;
}

// Points a of the unit circle with r . a = z, r != 0.
std::size_t count_line_meets_circle(const ExactPoint& r, const Rational& z, CountMode mode) {
  const int s = (r.norm2() - z * z).sign();
  if (s == 0) return 1;
  if (mode == CountMode::Complex) return 2;
  return s > 0 ? 2 : 0;
}

}  // namespace

void validate_split(const PointSet& p1, const PointSet& p2) {
  if (p1.empty() || p2.empty()) throw InputError("circle split needs nonempty P1 and P2");
  for (const auto& a : p1) {
    if (!on_unit_circle(a)) throw InputError("off-circle point: " + a.to_string() + " in P1 is not on the unit circle");
    require_off_axis(a);
  }
  for (const auto& p : p2) {
    if (on_unit_circle(p)) throw InputError("misplaced point: " + p.to_string() + " in P2 lies on the unit circle");
    require_off_axis(p);
  }
}

Rational slice_key(const ExactPoint& p) { return p.norm2(); }

QuadrupleStats build_quadruple_stats_circle(const PointSet& p1, const PointSet& p2) {
  validate_split(p1, p2);
  return quadruple_stats(analysis::bipartite_distances(p1, p2), slice_key);
}

QuadrupleStats enumerate_quadruples_circle(const PointSet& p1, const PointSet& p2, bool force) {
  validate_split(p1, p2);
  if (!force && static_cast<std::uint64_t>(p1.size()) * p2.size() > kEnumerationGuard) {
    throw SizeGuardError("quadruple enumeration refused: |P1|*|P2| = " + std::to_string(p1.size() * p2.size()) +
                         " exceeds " + std::to_string(kEnumerationGuard));
  }
  return enumerate_quadruple_stats(analysis::bipartite_distances(p1, p2), slice_key);
}

ChoiceBoundReport q1_choice_bound_check_circle(const PointSet& p1, const PointSet& p2) {
  validate_split(p1, p2);
  ChoiceBoundReport report;
  report.bound = 2;
  // Completions of (a, b, p) are the q with |q|^2 = |p|^2 and
  // b . q = a . p, i.e. |bq| = |ap| once the norms agree.
  std::unordered_map<Rational, std::vector<std::size_t>> shells;
  for (std::size_t j = 0; j < p2.size(); ++j) shells[slice_key(p2[j])].push_back(j);
  for (const auto& b : p1) {
    for (const auto& a : p1) {
      for (const auto& p : p2) {
        const Rational target = squared_distance(a, p);
        std::uint64_t c = 0;
        for (std::size_t j : shells.at(slice_key(p))) {
          const ExactPoint& q = p2[j];
          if (a == b && p == q) continue;
          if (squared_distance(b, q) == target) ++c;
        }
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

CircleCurve4D::CircleCurve4D(ExactPoint p, ExactPoint q)
    : p_(std::move(p)), q_(std::move(q)), offset_(half_offset(p_, q_)) {
  if (offset_.is_zero()) {
    throw InputError("curve for " + p_.to_string() + ", " + q_.to_string() + " needs |p| != |q|");
  }
}

bool CircleCurve4D::satisfies_linear(const ExactPoint& a, const ExactPoint& b) const {
  return dot(a, p_) == dot(b, q_) + offset_;
}

bool curve_membership(const ExactPoint& a, const ExactPoint& b, const CircleCurve4D& curve) {
  if (!on_unit_circle(a)) throw InputError("off-circle point: " + a.to_string());
  if (!on_unit_circle(b)) throw InputError("off-circle point: " + b.to_string());
  return curve.satisfies_linear(a, b);
}

CircleFamily build_circle_family(const PointSet& p2) {
  CircleFamily family;
  family.p2 = p2;
  std::vector<Rational> norms;
  norms.reserve(p2.size());
  for (const auto& p : p2) norms.push_back(p.norm2());
  for (std::uint32_t i = 0; i < p2.size(); ++i) {
    for (std::uint32_t j = 0; j < p2.size(); ++j) {
      if (i == j) continue;
      if (norms[i] == norms[j]) {
        ++family.skipped_concentric;
        continue;
      }
      family.pairs.emplace_back(i, j);
    }
  }
  return family;
}

std::uint64_t count_incidences_circle(const PointSet& p1, const CircleFamily& family) {
  const PointSet& p2 = family.p2;
  // a lies on gamma_pq against b iff a . p - |p|^2/2 = b . q - |q|^2/2.
  std::vector<std::vector<Rational>> level(p2.size());
  std::vector<std::unordered_map<Rational, std::uint64_t>> level_counts(p2.size());
  for (std::size_t j = 0; j < p2.size(); ++j) {
    const Rational half = p2[j].norm2() / Rational(2);
    level[j].reserve(p1.size());
    for (const auto& a : p1) {
      level[j].push_back(dot(a, p2[j]) - half);
      ++level_counts[j][level[j].back()];
    }
  }
  auto partial = map_chunks<std::uint64_t>(family.pairs.size(), [&](std::size_t lo, std::size_t hi) {
    std::uint64_t sum = 0;
    for (std::size_t k = lo; k < hi; ++k) {
      const auto [i, j] = family.pairs[k];
      const auto& counts = level_counts[j];
      for (const auto& u : level[i]) {
        auto it = counts.find(u);
        if (it != counts.end()) sum += it->second;
      }
    }
    return sum;
  });
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  return total;
}

int Matrix2::rank() const {
  if (!det().is_zero()) return 2;
  if (a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero()) return 0;
  return 1;
}

PairMatrix PairMatrix::of(const CircleCurve4D& c1, const CircleCurve4D& c2) {
  PairMatrix m;
  m.mp = {c1.p().x, c1.p().y, c2.p().x, c2.p().y};
  m.mq = {c1.q().x, c1.q().y, c2.q().x, c2.q().y};
  m.offsets = {c1.offset(), c2.offset()};
  return m;
}

IntersectionCount intersection_count_4d(const CircleCurve4D& c1, const CircleCurve4D& c2, CountMode mode) {
  if (c1.p() == c2.p() && c1.q() == c2.q()) throw InputError("intersection_count_4d needs two different pairs");
  for (const auto* pt : {&c1.p(), &c1.q(), &c2.p(), &c2.q()}) require_off_axis(*pt);

  const PairMatrix pm = PairMatrix::of(c1, c2);
  IntersectionCount out;
  if (!pm.mp.det().is_zero()) {
    out.branch = IntersectionBranch::PNonsingular;
    out.count = count_on_conic(solve_through(pm.mp, pm.mq, pm.offsets), mode);
  } else if (!pm.mq.det().is_zero()) {
    // b = mq^-1 (mp a - offsets)
    out.branch = IntersectionBranch::QNonsingular;
    const std::array<Rational, 2> neg{-pm.offsets[0], -pm.offsets[1]};
    out.count = count_on_conic(solve_through(pm.mq, pm.mp, neg), mode);
  } else {
    // Rows are proportional: p' = lp p and q' = lq q (p_x, q_x != 0), so the
    // system reads u (1, lp) - v (1, lq) = offsets with u = a . p, v = b . q.
    const Rational lp = c2.p().x / c1.p().x;
    const Rational lq = c2.q().x / c1.q().x;
    const Rational& o1 = pm.offsets[0];
    const Rational& o2 = pm.offsets[1];
    if (lp == lq) {
      if (o2 == lp * o1) throw InfiniteIntersection("both range lines coincide and contain the offset vector");
      out.branch = IntersectionBranch::BothSingularEmpty;
      out.count = 0;
    } else {
      out.branch = IntersectionBranch::BothSingularPoint;
      const Rational u = (o2 - lq * o1) / (lp - lq);
      const Rational v = u - o1;
      out.count = count_line_meets_circle(c1.p(), u, mode) * count_line_meets_circle(c1.q(), v, mode);
    }
  }
  if (out.count > 4) {
    throw InvariantViolation("curves for " + c1.p().to_string() + "," + c1.q().to_string() + " and " +
                             c2.p().to_string() + "," + c2.q().to_string() + " meet in " +
                             std::to_string(out.count) + " points");
  }
  return out;
}

bool same_curve_conditions_check(const ExactPoint& p, const ExactPoint& q, const ExactPoint& p2,
                                 const ExactPoint& q2) {
  for (const auto* pt : {&p, &q, &p2, &q2}) require_off_axis(*pt);
  const Rational a1 = half_offset(p, q);
  const Rational a2 = half_offset(p2, q2);
  if (a1.is_zero() || a2.is_zero()) throw InputError("same_curve_conditions_check needs |p| != |q| and |p'| != |q'|");
  const Matrix2 mp{p.x, p.y, p2.x, p2.y};
  const Matrix2 mq{q.x, q.y, q2.x, q2.y};
  if (!mp.det().is_zero() || !mq.det().is_zero()) return false;
  // Both ranges are spanned by their first columns (p_x, p'_x), (q_x, q'_x).
  const bool same_range = p.x * q2.x == p2.x * q.x;
  const bool offset_in_range = p.x * a2 == p2.x * a1;
  return same_range && offset_in_range;
}

FourPointReport four_point_check(const CircleFamily& family, std::size_t exhaustive_limit, std::size_t samples,
                            std::size_t engineered, std::uint64_t seed) {
  FourPointReport report;
  struct Job {
    CircleCurve4D c1;
    CircleCurve4D c2;
    bool engineered;
  };
  std::vector<Job> jobs;
  const std::size_t g = family.size();
  if (g <= exhaustive_limit) {
    report.exhaustive = true;
    for (std::size_t i = 0; i < g; ++i) {
      for (std::size_t j = i + 1; j < g; ++j) jobs.push_back({family.curve(i), family.curve(j), false});
    }
  }
  Rng rng(seed);
  if (!report.exhaustive) {
    while (jobs.size() < samples) {
      std::size_t i = rng.below(g);
      std::size_t j = rng.below(g);
      if (i != j) jobs.push_back({family.curve(i), family.curve(j), false});
    }
  }
  // Singular M_pp': p' = l p. Every other one also takes q' = m q, which
  // makes M_qq' singular too.
  std::size_t made = 0;
  std::size_t attempts = 0;
  while (made < engineered && g > 0) {
    if (++attempts > 100 * engineered + 1000) throw InputError("could not engineer singular curve pairs");
    const CircleCurve4D base = family.curve(rng.below(g));
    Rational l(rng.between(-6, 6), rng.between(1, 4));
    if (l.is_zero() || l == Rational(1)) continue;
    const ExactPoint p2{base.p().x * l, base.p().y * l};
    ExactPoint q2;
    if (made % 2 == 1) {
      Rational m(rng.between(-6, 6), rng.between(1, 4));
      if (m.is_zero()) continue;
      q2 = {base.q().x * m, base.q().y * m};
    } else {
      q2 = family.p2[rng.below(family.p2.size())];
    }
    if (p2.norm2() == q2.norm2()) continue;
    jobs.push_back({base, CircleCurve4D(p2, q2), true});
    ++made;
  }

  struct Outcome {
    std::size_t real = 0;
    std::size_t complex = 0;
    bool singular = false;
    bool infinite = false;
  };
  auto chunks = map_chunks<std::vector<Outcome>>(jobs.size(), [&](std::size_t lo, std::size_t hi) {
    std::vector<Outcome> out;
    out.reserve(hi - lo);
    for (std::size_t k = lo; k < hi; ++k) {
      Outcome o;
      try {
        const auto r = intersection_count_4d(jobs[k].c1, jobs[k].c2, CountMode::Real);
        o.real = r.count;
        o.complex = intersection_count_4d(jobs[k].c1, jobs[k].c2, CountMode::Complex).count;
        o.singular = r.branch != IntersectionBranch::PNonsingular;
      } catch (const InfiniteIntersection&) {
        o.infinite = true;
      } catch (const InvariantViolation&) {
        o.real = 5;
      }
      out.push_back(o);
    }
    return out;
  });
  std::size_t k = 0;
  for (const auto& chunk : chunks) {
    for (const auto& o : chunk) {
      ++report.pairs_checked;
      if (jobs[k++].engineered) ++report.engineered_pairs;
      if (o.singular) ++report.singular_pairs;
      if (o.infinite || o.real > 4 || o.complex > 4 || o.real > o.complex) {
        ++report.violations;
        continue;
      }
      report.max_count = std::max(report.max_count, o.real);
      report.max_complex_count = std::max(report.max_complex_count, o.complex);
      ++report.histogram[o.real];
    }
  }
  return report;
}

CircleAnalysis analyze_circle_split(const PointSet& p1, const PointSet& p2) {
  validate_split(p1, p2);
  CircleAnalysis r;
  r.p1_size = p1.size();
  r.p2_size = p2.size();
  r.n = p1.size() + p2.size();
  r.alpha = analysis::richness_exponent(p1.size(), r.n);
  r.stats = build_quadruple_stats_circle(p1, p2);
  const CircleFamily family = build_circle_family(p2);
  r.gamma_size = family.size();
  r.skipped_concentric = family.skipped_concentric;
  r.incidences = count_incidences_circle(p1, family);
  return r;
}

}  // namespace distdist::circle
