#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "distdist/point.hpp"
#include "distdist/quadruples.hpp"

namespace distdist::circle {

// P1 on the unit circle, P2 off it, and no point of either on a coordinate
// axis. Throws InputError naming the first offending point.
void validate_split(const PointSet& p1, const PointSet& p2);

// Degenerate slice: |p|^2 == |q|^2 (p and q concentric with the unit circle).
Rational slice_key(const ExactPoint& p);

QuadrupleStats build_quadruple_stats_circle(const PointSet& p1, const PointSet& p2);

// Throws SizeGuardError when |P1| * |P2| > kEnumerationGuard unless forced.
QuadrupleStats enumerate_quadruples_circle(const PointSet& p1, const PointSet& p2, bool force = false);

// For every (a, b, p) counts the q with |q| = |p|, |ap| = |bq| and
// (b, q) != (a, p); the bound is 2.
ChoiceBoundReport q1_choice_bound_check_circle(const PointSet& p1, const PointSet& p2);

// The set of (a, b) in C^4 with
//   a . p = b . q + A_pq,  |a|^2 = 1,  |b|^2 = 1,
// where A_pq = (|p|^2 - |q|^2) / 2.
class CircleCurve4D {
 public:
  // Throws InputError when A_pq == 0.
  CircleCurve4D(ExactPoint p, ExactPoint q);

  const ExactPoint& p() const { return p_; }
  const ExactPoint& q() const { return q_; }
  const Rational& offset() const { return offset_; }

  // Only the linear equation; the caller guarantees |a| = |b| = 1.
  bool satisfies_linear(const ExactPoint& a, const ExactPoint& b) const;

 private:
  ExactPoint p_;
  ExactPoint q_;
  Rational offset_;
};

// True iff (a, b) lies on the curve. Throws InputError unless a and b are
// exactly on the unit circle.
bool curve_membership(const ExactPoint& a, const ExactPoint& b, const CircleCurve4D& curve);

// Curves for ordered pairs p != q of P2 with |p|^2 != |q|^2, stored as index
// pairs into P2.
struct CircleFamily {
  PointSet p2;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::uint64_t skipped_concentric = 0;

  std::size_t size() const { return pairs.size(); }
  CircleCurve4D curve(std::size_t k) const { return {p2[pairs[k].first], p2[pairs[k].second]}; }
};

CircleFamily build_circle_family(const PointSet& p2);

// Number of pairs ((a, b), curve) with a, b in P1 and (a, b) on the curve.
std::uint64_t count_incidences_circle(const PointSet& p1, const CircleFamily& family);

struct Matrix2 {
  Rational a, b, c, d;  // [[a, b], [c, d]]

  Rational det() const { return a * d - b * c; }
  int rank() const;
};

// M_pp' = [[p_x, p_y], [p'_x, p'_y]], M_qq' likewise, and the offsets
// (A_pq, A_p'q'), so the two linear equations read M_pp' a = M_qq' b + A.
struct PairMatrix {
  Matrix2 mp;
  Matrix2 mq;
  std::array<Rational, 2> offsets;

  static PairMatrix of(const CircleCurve4D& c1, const CircleCurve4D& c2);
};

enum class CountMode { Real, Complex };

enum class IntersectionBranch {
  PNonsingular,       // a = T(b)
  QNonsingular,       // b = T(a)
  BothSingularEmpty,  // the two range lines miss each other
  BothSingularPoint,  // they meet in one point
};

struct IntersectionCount {
  std::size_t count = 0;
  IntersectionBranch branch = IntersectionBranch::PNonsingular;
};

// Number of distinct solutions (a, b) of both curve systems, real or
// complex according to `mode`. Throws InputError for identical (p, q) and
// InfiniteIntersection when the system has a one-dimensional solution set.
IntersectionCount intersection_count_4d(const CircleCurve4D& c1, const CircleCurve4D& c2,
                                        CountMode mode = CountMode::Real);

// det M_pp' = 0, det M_qq' = 0, range M_pp' = range M_qq' and
// (A_pq, A_p'q') in range M_pp'. Throws InputError for axis points or
// A_pq = 0 or A_p'q' = 0.
bool same_curve_conditions_check(const ExactPoint& p, const ExactPoint& q, const ExactPoint& p2, const ExactPoint& q2);

struct FourPointReport {
  std::uint64_t pairs_checked = 0;
  std::uint64_t engineered_pairs = 0;  // pairs with a singular M_pp' or M_qq'
  std::uint64_t singular_pairs = 0;
  std::size_t max_count = 0;
  std::size_t max_complex_count = 0;
  std::uint64_t violations = 0;  // more than four points, or infinitely many
  bool exhaustive = false;
  std::array<std::uint64_t, 5> histogram{};  // real counts 0..4
};

// Intersection oracle over curves of the family: all pairs when the family
// has at most `exhaustive_limit` curves, `samples` random pairs otherwise,
// plus `engineered` pairs built as (p, q) against (lambda p, q') so that
// M_pp' is singular.
FourPointReport four_point_check(const CircleFamily& family, std::size_t exhaustive_limit = 200, std::size_t samples = 500,
                            std::size_t engineered = 50, std::uint64_t seed = 0);

struct CircleAnalysis {
  std::size_t n = 0;
  std::size_t p1_size = 0;
  std::size_t p2_size = 0;
  double alpha = 0.0;
  QuadrupleStats stats;
  std::uint64_t incidences = 0;
  std::uint64_t gamma_size = 0;
  std::uint64_t skipped_concentric = 0;

  bool consistent() const {
    return incidences == stats.q2 && stats.q_total == stats.q1 + stats.q2 && stats.cauchy_schwarz_holds();
  }
};

CircleAnalysis analyze_circle_split(const PointSet& p1, const PointSet& p2);

}  // namespace distdist::circle
