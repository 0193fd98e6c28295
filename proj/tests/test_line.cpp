#include <doctest.h>

#include "distdist/error.hpp"
#include "distdist/generators.hpp"
#include "distdist/line_framework.hpp"
#include "oracles.hpp"

using namespace distdist;
using namespace distdist::line;
namespace gen = distdist::gen;

namespace {

Rational y_square(const ExactPoint& p) { return p.y * p.y; }

// Intersections of two hyperbolas by substituting the line f - f' = 0
// into f and solving the resulting quadratic by hand. -1 for infinitely
// many.
int substituted_intersections(const HyperbolaCurve& c1, const HyperbolaCurve& c2) {
  const Rational px = c1.p().x, qx = c1.q().x;
  const Rational g0 = y_square(c1.p()) - y_square(c1.q()) + px * px - qx * qx;
  const Rational p2x = c2.p().x, q2x = c2.q().x;
  const Rational h0 = y_square(c2.p()) - y_square(c2.q()) + p2x * p2x - q2x * q2x;
  // f - f' = a x + b y + c.
  const Rational a = Rational(-2) * (px - p2x);
  const Rational b = Rational(2) * (qx - q2x);
  const Rational c = g0 - h0;
  const Rational base = y_square(c1.p()) - y_square(c1.q());
  auto count_quadratic = [](const Rational& k2, const Rational& k1, const Rational& k0) {
    if (!k2.is_zero()) {
      const int s = (k1 * k1 - Rational(4) * k2 * k0).sign();
      return s > 0 ? 2 : (s == 0 ? 1 : 0);
    }
    if (!k1.is_zero()) return 1;
    return k0.is_zero() ? -1 : 0;
  };
  if (!b.is_zero()) {
    const Rational m = -a / b, k = -c / b;
    const Rational kq = k - qx;
    return count_quadratic(Rational(1) - m * m, Rational(-2) * px - Rational(2) * m * kq, px * px - kq * kq + base);
  }
  if (a.is_zero()) return c.is_zero() ? -1 : 0;
  const Rational x0 = -c / a;
  const Rational c0 = (x0 - px) * (x0 - px) + base;
  const int s = c0.sign();
  return s > 0 ? 2 : (s == 0 ? 1 : 0);
}

PointSet small_axis_set(oracle::Gen& g, std::size_t n, std::int64_t span) {
  std::set<ExactPoint> s;
  while (s.size() < n) s.insert({g.range(-span, span), 0});
  return PointSet(std::vector<ExactPoint>(s.begin(), s.end()));
}

PointSet small_off_axis_set(oracle::Gen& g, std::size_t n, std::int64_t span) {
  std::set<ExactPoint> s;
  while (s.size() < n) {
    ExactPoint p{g.range(-span, span), g.range(-span, span)};
    if (!p.y.is_zero()) s.insert(p);
  }
  return PointSet(std::vector<ExactPoint>(s.begin(), s.end()));
}

}  // namespace

TEST_CASE("quadruple counts on the worked configurations") {
  const auto s1 = build_quadruple_stats(PointSet({{0, 0}, {1, 0}}), PointSet({{0, 1}, {1, 1}}));
  CHECK(s1.q_total == 4);
  CHECK(s1.q1 == 4);
  CHECK(s1.q2 == 0);

  const auto s2 = build_quadruple_stats(PointSet({{0, 0}, {2, 0}}), PointSet({{1, 5}}));
  CHECK(s2.q_total == 2);

  const auto s3 = build_quadruple_stats(PointSet({{0, 0}, {1, 0}}), PointSet({{0, 1}, {5, 7}}));
  CHECK(s3.q_total == 0);

  // |(0,0)(0,5)| = |(5,0)(1,3)| = 5 with different |y|.
  const PointSet p1({{0, 0}, {5, 0}}), p2({{0, 5}, {1, 3}});
  const auto s4 = build_quadruple_stats(p1, p2);
  CHECK(s4.q2 == 2);
  CHECK(build_incidence_ledger(p1, p2).incidences == 2);

  const PointSet p3({{0, 0}, {2, 0}}), p4({{0, 1}, {2, 2}});
  CHECK(build_quadruple_stats(p3, p4).q2 == 0);
  CHECK(build_incidence_ledger(p3, p4).incidences == 0);
}

TEST_CASE("split validation") {
  CHECK_THROWS_AS(validate_split(PointSet({{0, 1}}), PointSet({{0, 2}})), InputError);
  CHECK_THROWS_AS(validate_split(PointSet({{0, 0}}), PointSet({{3, 0}})), InputError);
  CHECK_THROWS_AS(validate_split(PointSet(), PointSet({{3, 1}})), InputError);
  CHECK_NOTHROW(validate_split(PointSet({{0, 0}}), PointSet({{3, 1}})));
}

TEST_CASE("counted statistics match naive enumeration and incidences") {
  oracle::Gen g(31);
  for (int trial = 0; trial < 80; ++trial) {
    const PointSet p1 = small_axis_set(g, static_cast<std::size_t>(g.range(1, 7)), 6);
    const PointSet p2 = small_off_axis_set(g, static_cast<std::size_t>(g.range(1, 9)), 4);
    const auto counted = build_quadruple_stats(p1, p2);
    const auto naive = oracle::naive_quadruples(p1, p2, y_square);
    REQUIRE(counted.q_total == naive.total);
    REQUIRE(counted.q1 == naive.degenerate);
    REQUIRE(counted.q2 == naive.rest);
    REQUIRE(counted.q_total == ordered_quadruple_count(counted.class_sizes));
    REQUIRE(counted.cauchy_schwarz_holds());

    const auto listed = enumerate_quadruples(p1, p2);
    REQUIRE(listed.q_total == counted.q_total);
    REQUIRE(listed.q1 == counted.q1);

    const auto ledger = build_incidence_ledger(p1, p2);
    REQUIRE(ledger.incidences == counted.q2);
    REQUIRE(ledger.incidences == oracle::naive_line_incidences(p1, p2));
  }
}

TEST_CASE("enumeration size guard") {
  const auto big = gen::split_on_x_axis(gen::lattice(400, 300));
  CHECK_THROWS_AS(enumerate_quadruples(big.primary(), big.ambient()), SizeGuardError);
  const auto ok = gen::split_on_x_axis(gen::lattice(10, 4));
  CHECK_NOTHROW(enumerate_quadruples(ok.primary(), ok.ambient()));
  CHECK_NOTHROW(enumerate_quadruples(ok.primary(), ok.ambient(), true));
}

TEST_CASE("degenerate completions stay within four") {
  const PointSet p2({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
  const auto r = q1_choice_bound_check(PointSet({{0, 0}, {2, 0}}), p2);
  CHECK(r.max_completions >= 2);
  CHECK(r.ok());
  REQUIRE(r.witness);

  CHECK(q1_choice_bound_check(PointSet({{0, 0}, {3, 0}}), PointSet({{1, 2}})).max_completions <= 1);

  oracle::Gen g(41);
  for (int trial = 0; trial < 40; ++trial) {
    const PointSet p1 = small_axis_set(g, static_cast<std::size_t>(g.range(1, 10)), 8);
    const PointSet q = small_off_axis_set(g, static_cast<std::size_t>(g.range(1, 20)), 5);
    const auto rep = q1_choice_bound_check(p1, q);
    CHECK(rep.violations == 0);
    CHECK(rep.max_completions <= 4);
    CHECK(rep.triples == p1.size() * p1.size() * q.size());
  }
}

TEST_CASE("hyperbola curves and classes") {
  const HyperbolaCurve c({0, 1}, {2, 2});
  CHECK(c.contains(2, 1));
  CHECK(c.polynomial()(Rational(2), Rational(1)).is_zero());
  const auto x = exact::BiPoly::x(), y = exact::BiPoly::y();
  const auto y2 = y - exact::BiPoly::constant(2);
  CHECK(c.polynomial() == x * x - y2 * y2 - exact::BiPoly::constant(3));
  CHECK_THROWS_AS(HyperbolaCurve({0, 1}, {2, -1}), InputError);

  const PointSet p2({{1, 1}, {1, -1}, {2, 3}, {2, -3}});
  const auto family = build_hyperbola_family(p2);
  const HyperbolaKey key{1, 2, 8};
  bool found = false;
  for (const auto& cls : family.classes) {
    if (cls.key == key) {
      found = true;
      CHECK(cls.multiplicity == 4);
    }
  }
  CHECK(found);
  CHECK(HyperbolaCurve({1, 1}, {2, 3}).key() == HyperbolaCurve({1, -1}, {2, -3}).key());

  const auto mult = multiplicity_vs_vertical_lines(p2, family);
  CHECK(mult.v_max == 2);
  CHECK(mult.t == 4);
  CHECK(mult.holds);

  // Same key means the same zero set.
  oracle::Gen g(3);
  for (const auto& cls : family.classes) {
    const auto poly = cls.curve().polynomial();
    for (int i = 0; i < 50; ++i) {
      const Rational a = g.rational(9, 3), b = g.rational(9, 3);
      CHECK(HyperbolaCurve(p2[1], p2[3]).contains(a, b) == HyperbolaCurve(p2[0], p2[2]).contains(a, b));
      CHECK(poly(a, b).is_zero() == cls.curve().contains(a, b));
    }
  }
}

TEST_CASE("multiplicity against vertical lines") {
  const PointSet distinct_x({{1, 1}, {2, 3}, {3, 7}, {4, -2}, {5, 5}});
  const auto r = multiplicity_vs_vertical_lines(distinct_x, build_hyperbola_family(distinct_x));
  CHECK(r.v_max == 1);
  CHECK(r.t <= 2);

  const PointSet single({{1, 1}});
  CHECK(multiplicity_vs_vertical_lines(single, build_hyperbola_family(single)).t == 0);

  oracle::Gen g(77);
  for (int trial = 0; trial < 60; ++trial) {
    const PointSet p2 = small_off_axis_set(g, static_cast<std::size_t>(g.range(1, 40)), 4);
    const auto family = build_hyperbola_family(p2);
    const auto m = multiplicity_vs_vertical_lines(p2, family);
    REQUIRE(m.holds);
    std::uint64_t sum = 0;
    for (const auto& cls : family.classes) sum += cls.multiplicity;
    REQUIRE(sum == family.gamma_size);
  }
}

TEST_CASE("sum and difference sets") {
  const auto r = enr_products({1, 2, 3}, {1, 2});
  CHECK(r.difference_size == 5);
  CHECK(r.square_sum_size == 5);
  CHECK(r.product == 25);
  for (std::int64_t n = 1; n <= 20; ++n) {
    std::vector<Rational> ap;
    for (std::int64_t i = 0; i < n; ++i) ap.push_back(Rational(3 * i + 1));
    CHECK(enr_products(ap, {1}).difference_size == static_cast<std::size_t>(2 * n - 1));
  }
  const auto one = enr_products({1}, {1});
  CHECK(one.difference_size == 1);
  CHECK(one.square_sum_size == 1);
  CHECK_THROWS_AS(enr_products({}, {1}), InputError);

  const auto split = gen::split_on_x_axis(gen::lattice(6, 4));
  const auto e = enr_for_split(split.primary(), split.ambient());
  CHECK(e.a_size == 6);
  CHECK(e.b_size == 3);
}

TEST_CASE("hyperbola pairs meet in at most two points") {
  const HyperbolaCurve h1({0, 1}, {2, 2}), h2({0, 3}, {2, 2});
  CHECK(hyperbola_intersection_count(h1, h2) <= 2);
  CHECK(hyperbola_intersection_count(h1, h2) == static_cast<std::size_t>(substituted_intersections(h1, h2)));
  CHECK_THROWS_AS(HyperbolaCurve({0, 2}, {2, 2}), InputError);
  CHECK_THROWS_AS(hyperbola_intersection_count(HyperbolaCurve({1, 1}, {2, 3}), HyperbolaCurve({1, -1}, {2, -3})),
                  AlgebraError);

  oracle::Gen g(55);
  std::size_t seen[3] = {0, 0, 0};
  for (int trial = 0; trial < 3000; ++trial) {
    const ExactPoint p = g.off_axis(4, 2), q = g.off_axis(4, 2);
    const ExactPoint p2 = g.off_axis(4, 2), q2 = g.off_axis(4, 2);
    if (y_square(p) == y_square(q) || y_square(p2) == y_square(q2)) continue;
    const HyperbolaCurve c1(p, q), c2(p2, q2);
    if (c1.key() == c2.key()) continue;
    const int expected = substituted_intersections(c1, c2);
    REQUIRE(expected >= 0);
    const std::size_t got = hyperbola_intersection_count(c1, c2);
    REQUIRE(got == static_cast<std::size_t>(expected));
    ++seen[got];
  }
  // Every outcome shows up in the sample.
  CHECK(seen[0] > 0);
  CHECK(seen[1] > 0);
  CHECK(seen[2] > 0);
}

TEST_CASE("degrees of freedom check") {
  const auto split = gen::random_line_split(60, 0.5, 9);
  const auto family = build_hyperbola_family(split.ambient());
  const auto sampled = degrees_of_freedom_check_line(family, 200, 3000, 1);
  CHECK_FALSE(sampled.exhaustive);
  CHECK(sampled.pairs_checked == 3000);
  CHECK(sampled.violations == 0);
  CHECK(sampled.max_count <= 2);

  oracle::Gen g(2);
  const PointSet small = small_off_axis_set(g, 10, 3);
  const auto exhaustive = degrees_of_freedom_check_line(build_hyperbola_family(small));
  CHECK(exhaustive.exhaustive);
  CHECK(exhaustive.violations == 0);
}

TEST_CASE("analysis bundle") {
  const auto split = gen::split_on_x_axis(gen::translate(gen::lattice(8, 4), 0, 0));
  const auto a = analyze_line_split(split.primary(), split.ambient());
  CHECK(a.consistent());
  CHECK(a.n == 32);
  CHECK(a.p1_size == 8);
  CHECK(a.incidences == a.stats.q2);
  CHECK(a.multiplicity.holds);
}
