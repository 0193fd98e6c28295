#include <doctest.h>

#include "distdist/circle_framework.hpp"
#include "distdist/error.hpp"
#include "distdist/generators.hpp"
#include "oracles.hpp"

using namespace distdist;
using namespace distdist::circle;
namespace gen = distdist::gen;

namespace {

const ExactPoint kA{Rational(3, 5), Rational(4, 5)};
const ExactPoint kB{Rational(-3, 5), Rational(4, 5)};
const ExactPoint kP{Rational(3, 5), Rational(14, 5)};
const ExactPoint kQ{Rational(-3, 5), Rational(-6, 5)};

Rational norm_key(const ExactPoint& p) { return p.norm2(); }

// Off-axis point whose norm differs from 1.
ExactPoint off_circle(oracle::Gen& g, std::int64_t span = 9, std::int64_t den = 3) {
  for (;;) {
    const ExactPoint p = g.off_axis(span, den);
    if (p.norm2() != Rational(1)) return p;
  }
}

std::pair<ExactPoint, ExactPoint> valid_pair(oracle::Gen& g) {
  for (;;) {
    const ExactPoint p = off_circle(g), q = off_circle(g);
    if (p.norm2() != q.norm2()) return {p, q};
  }
}

ExactPoint scaled(const ExactPoint& p, const Rational& l) { return {l * p.x, l * p.y}; }

}  // namespace

TEST_CASE("membership matches distance equality") {
  CHECK(curve_membership(kA, kB, CircleCurve4D(kP, kQ)));
  CHECK_FALSE(curve_membership(kA, kB, CircleCurve4D({1, 3}, {2, 1})));
  CHECK_THROWS_AS(CircleCurve4D(kP, kP), InputError);
  CHECK_THROWS_AS(CircleCurve4D({3, 4}, {4, 3}), InputError);
  CHECK_THROWS_AS(curve_membership({1, 1}, kB, CircleCurve4D(kP, kQ)), InputError);

  oracle::Gen g(13);
  const PointSet circle = gen::random_circle_points(12, 5);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto [p, q] = valid_pair(g);
    const ExactPoint& a = circle[static_cast<std::size_t>(g.range(0, 11))];
    const ExactPoint& b = circle[static_cast<std::size_t>(g.range(0, 11))];
    const CircleCurve4D c(p, q);
    REQUIRE(curve_membership(a, b, c) == (squared_distance(a, p) == squared_distance(b, q)));
    REQUIRE(curve_membership(a, b, c) == c.satisfies_linear(a, b));
  }
}

TEST_CASE("membership is invariant under a rational rotation") {
  oracle::Gen g(19);
  const Rational c(3, 5), s(4, 5);
  auto rot = [&](const ExactPoint& p) { return ExactPoint{c * p.x - s * p.y, s * p.x + c * p.y}; };
  const PointSet circle = gen::random_circle_points(10, 2);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto [p, q] = valid_pair(g);
    const ExactPoint& a = circle[static_cast<std::size_t>(g.range(0, 9))];
    const ExactPoint& b = circle[static_cast<std::size_t>(g.range(0, 9))];
    REQUIRE(curve_membership(a, b, CircleCurve4D(p, q)) ==
            curve_membership(rot(a), rot(b), CircleCurve4D(rot(p), rot(q))));
  }
}

TEST_CASE("circle split quadruples") {
  const PointSet p1({kA, kB}), p2({kP, kQ});
  const auto s = build_quadruple_stats_circle(p1, p2);
  CHECK(s.q2 >= 2);
  CHECK(s.q_total == s.q1 + s.q2);
  CHECK(count_incidences_circle(p1, build_circle_family(p2)) == s.q2);

  // Concentric P2 contributes nothing to q2.
  const PointSet ring({{3, 4}, {4, 3}, {-3, 4}, {5, 0}});
  CHECK_THROWS_AS(build_quadruple_stats_circle(p1, ring), InputError);
  const PointSet ring2({{3, 4}, {4, 3}, {-3, 4}, {-4, -3}});
  const auto r = build_quadruple_stats_circle(p1, ring2);
  CHECK(r.q2 == 0);
  CHECK(r.q_total == r.q1);
  const auto fam = build_circle_family(ring2);
  CHECK(fam.size() == 0);
  CHECK(count_incidences_circle(p1, fam) == 0);

  // A single vertex set still agrees.
  const PointSet lone({kA});
  CHECK(count_incidences_circle(lone, build_circle_family(p2)) == build_quadruple_stats_circle(lone, p2).q2);

  CHECK_THROWS_AS(validate_split(PointSet({{1, 1}}), p2), InputError);
  CHECK_THROWS_AS(validate_split(p1, PointSet({kA})), InputError);
}

TEST_CASE("circle counters agree with naive enumeration") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto split = gen::random_circle_split(8 + seed % 12, 0.5, seed);
    const auto& p1 = split.primary();
    const auto& p2 = split.ambient();
    const auto counted = build_quadruple_stats_circle(p1, p2);
    const auto naive = oracle::naive_quadruples(p1, p2, norm_key);
    REQUIRE(counted.q_total == naive.total);
    REQUIRE(counted.q1 == naive.degenerate);
    REQUIRE(counted.q2 == naive.rest);
    REQUIRE(counted.cauchy_schwarz_holds());
    const auto listed = enumerate_quadruples_circle(p1, p2);
    REQUIRE(listed.q_total == counted.q_total);
    const auto fam = build_circle_family(p2);
    REQUIRE(count_incidences_circle(p1, fam) == counted.q2);
    REQUIRE(oracle::naive_circle_incidences(p1, p2) == counted.q2);

    const auto a = analyze_circle_split(p1, p2);
    CHECK(a.consistent());
    CHECK(a.gamma_size == fam.size());
  }
}

TEST_CASE("concentric completions stay within two") {
  // Reflections through the origin with a symmetric pair on the circle.
  const PointSet p1({kA, kB, {Rational(-3, 5), Rational(-4, 5)}, {Rational(3, 5), Rational(-4, 5)}});
  const PointSet p2({{1, 2}, {-1, -2}, {2, 1}, {-2, -1}, {1, -2}});
  const auto r = q1_choice_bound_check_circle(p1, p2);
  CHECK(r.ok());
  CHECK(r.max_completions >= 1);
  CHECK(r.max_completions <= 2);

  const PointSet distinct_norms({{1, 2}, {2, 3}, {3, 5}});
  CHECK(q1_choice_bound_check_circle(p1, distinct_norms).max_completions == 0);
  CHECK(q1_choice_bound_check_circle(p1, PointSet({{1, 2}})).max_completions <= 1);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto split = gen::random_circle_split(40, 0.5, seed);
    const auto rep = q1_choice_bound_check_circle(split.primary(), split.ambient());
    CHECK(rep.violations == 0);
    CHECK(rep.max_completions <= 2);
  }
}

TEST_CASE("two circle curves meet in at most four points") {
  const auto ex = intersection_count_4d(CircleCurve4D(kP, kQ), CircleCurve4D(kQ, kP));
  CHECK(ex.count <= 4);
  CHECK_THROWS_AS(intersection_count_4d(CircleCurve4D(kP, kQ), CircleCurve4D(kP, kQ)), InputError);

  oracle::Gen g(101);
  std::size_t matched = 0, compared = 0;
  std::array<std::size_t, 5> hist{};
  for (int trial = 0; trial < 600; ++trial) {
    const auto [p, q] = valid_pair(g);
    const auto [p2, q2] = valid_pair(g);
    if (p == p2 && q == q2) continue;
    const CircleCurve4D c1(p, q), c2(p2, q2);
    const auto real = intersection_count_4d(c1, c2, CountMode::Real);
    const auto complex = intersection_count_4d(c1, c2, CountMode::Complex);
    REQUIRE(real.count <= complex.count);
    REQUIRE(complex.count <= 4);
    ++hist[real.count];
    const auto sampled = oracle::sampled_4d_count(c1, c2);
    if (!sampled) continue;
    ++compared;
    // The float oracle can miss tangencies but never invents roots.
    REQUIRE(*sampled <= real.count);
    if (*sampled == real.count) ++matched;
  }
  CHECK(matched * 10 >= compared * 9);
  CHECK(hist[0] > 0);
  CHECK((hist[2] + hist[4]) > 0);
}

TEST_CASE("singular matrices take the other branches") {
  oracle::Gen g(7);
  std::size_t seen_q = 0, seen_both = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto [p, q] = valid_pair(g);
    const Rational l = Rational(g.range(2, 5), g.range(1, 3));
    const ExactPoint p2 = scaled(p, l);
    ExactPoint q2 = off_circle(g);
    if (trial % 2 == 1) q2 = scaled(q, Rational(g.range(2, 5), g.range(1, 3)));
    if (p2 == p && q2 == q) continue;
    if (p2.norm2() == q2.norm2() || p2.norm2() == Rational(1) || q2.norm2() == Rational(1)) continue;
    const CircleCurve4D c1(p, q), c2(p2, q2);
    const auto real = intersection_count_4d(c1, c2, CountMode::Real);
    const auto complex = intersection_count_4d(c1, c2, CountMode::Complex);
    REQUIRE(real.branch != IntersectionBranch::PNonsingular);
    REQUIRE(real.count <= complex.count);
    REQUIRE(complex.count <= 4);
    if (real.branch == IntersectionBranch::QNonsingular) {
      ++seen_q;
      const auto sampled = oracle::sampled_4d_count(c1, c2);
      REQUIRE(sampled);
      REQUIRE(*sampled <= real.count);
    } else {
      ++seen_both;
    }
  }
  CHECK(seen_q > 0);
  CHECK(seen_both > 0);
}

TEST_CASE("matrix rank") {
  CHECK(Matrix2{0, 0, 0, 0}.rank() == 0);
  CHECK(Matrix2{1, 2, 2, 4}.rank() == 1);
  CHECK(Matrix2{1, 2, 3, 4}.rank() == 2);
  CHECK(Matrix2{1, 2, 3, 4}.det() == Rational(-2));
}

TEST_CASE("same-curve conditions force equal pairs") {
  const ExactPoint p{1, 2}, q{3, 1};
  CHECK(same_curve_conditions_check(p, q, p, q));
  CHECK_FALSE(same_curve_conditions_check(p, q, scaled(p, 2), scaled(q, 2)));
  CHECK_THROWS_AS(same_curve_conditions_check({0, 2}, q, p, q), InputError);

  oracle::Gen g(29);
  std::size_t trues = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto [a, b] = valid_pair(g);
    ExactPoint c, d;
    switch (trial % 4) {
      case 0:
        c = a, d = b;
        break;
      case 1:
        c = scaled(a, Rational(g.range(1, 4), g.range(1, 4)));
        d = scaled(b, Rational(g.range(1, 4), g.range(1, 4)));
        break;
      default:
        c = off_circle(g), d = off_circle(g);
    }
    if (c.norm2() == d.norm2()) continue;
    const bool same = same_curve_conditions_check(a, b, c, d);
    if (same) ++trues;
    REQUIRE(same == (a == c && b == d));
  }
  CHECK(trues > 0);
}

TEST_CASE("pairwise intersection sweep over a family") {
  const auto split = gen::random_circle_split(80, 0.5, 3);
  const auto fam = build_circle_family(split.ambient());
  REQUIRE(fam.size() > 200);
  const auto r = four_point_check(fam, 200, 500, 50, 1);
  CHECK_FALSE(r.exhaustive);
  CHECK(r.pairs_checked >= 550);
  CHECK(r.engineered_pairs >= 50);
  CHECK(r.violations == 0);
  CHECK(r.max_count <= 4);
  CHECK(r.max_complex_count <= 4);

  const auto small_split = gen::random_circle_split(14, 0.5, 4);
  const auto small = build_circle_family(small_split.ambient());
  REQUIRE(small.size() <= 200);
  const auto e = four_point_check(small);
  CHECK(e.exhaustive);
  CHECK(e.pairs_checked >= small.size() * (small.size() - 1) / 2);
  CHECK(e.violations == 0);
}
