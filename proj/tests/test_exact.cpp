#include <doctest.h>

#include <gmpxx.h>

#include <climits>
#include <unordered_set>

#include "distdist/error.hpp"
#include "distdist/exact/bipoly.hpp"
#include "distdist/exact/rational.hpp"
#include "distdist/exact/sturm.hpp"
#include "distdist/exact/unipoly.hpp"
#include "oracles.hpp"

using namespace distdist;
using namespace distdist::exact;

namespace {

Rational big_rational(oracle::Gen& g) {
  // Mix of tiny values, values near the int64 limits and huge values.
  switch (g.range(0, 3)) {
    case 0:
      return Rational(g.range(-20, 20), g.range(1, 20));
    case 1:
      return Rational(g.range(INT64_MAX - 1000, INT64_MAX) * (g.coin() ? 1 : -1), g.range(1, 5));
    case 2:
      return Rational(g.range(-1000, 1000), g.range(INT64_MAX - 1000, INT64_MAX));
    default: {
      mpz_class n = g.range(1, 1000000);
      n *= n;
      n *= n;
      n *= g.range(-99999, 99999);
      return Rational(mpq_class(n, mpz_class(g.range(1, 1000000)) * g.range(1, 1000000)));
    }
  }
}

UniPoly from_roots(const std::vector<Rational>& roots) {
  UniPoly p = UniPoly::constant(1);
  for (const auto& r : roots) p *= UniPoly{-r, Rational(1)};
  return p;
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(10, 5).to_string() == "2");
  CHECK(Rational::parse("-14/6") == Rational(-7, 3));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("0/7").is_zero());
  CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), InputError);
  CHECK_THROWS_AS(Rational::parse("abc"), InputError);
  CHECK_THROWS_AS(Rational::parse(""), InputError);
  CHECK_THROWS_AS(Rational(1, 0), InputError);
  CHECK_THROWS_AS(Rational(0).reciprocal(), std::exception);
}

TEST_CASE("rational overflow falls back to GMP and comes back") {
  const Rational big(INT64_MAX);
  const Rational sum = big + big;
  CHECK_FALSE(sum.is_small());
  CHECK(sum.to_mpq() == mpq_class(mpz_class(INT64_MAX) * 2));
  const Rational back = sum - big;
  CHECK(back.is_small());
  CHECK(back == big);
  CHECK(Rational(INT64_MIN).to_mpq() == mpq_class(mpz_class(INT64_MIN)));
  CHECK(-Rational(INT64_MIN) == Rational(mpq_class(-mpz_class(INT64_MIN))));
}

TEST_CASE("rational arithmetic agrees with GMP on random operands") {
  oracle::Gen g(11);
  for (int i = 0; i < 4000; ++i) {
    const Rational a = big_rational(g);
    const Rational b = big_rational(g);
    const mpq_class qa = a.to_mpq(), qb = b.to_mpq();
    REQUIRE((a + b).to_mpq() == qa + qb);
    REQUIRE((a - b).to_mpq() == qa - qb);
    REQUIRE((a * b).to_mpq() == qa * qb);
    if (!b.is_zero()) REQUIRE((a / b).to_mpq() == qa / qb);
    REQUIRE((a < b) == (qa < qb));
    REQUIRE((a == b) == (qa == qb));
    // Equal values hash equally whatever route produced them.
    const Rational c = (a + b) - b;
    REQUIRE(c == a);
    REQUIRE(c.hash() == a.hash());
    REQUIRE(Rational::parse(a.to_string()) == a);
  }
}

TEST_CASE("polynomial division, gcd and square-free part") {
  oracle::Gen g(5);
  for (int i = 0; i < 300; ++i) {
    std::vector<Rational> ca, cb;
    for (int k = 0, n = static_cast<int>(g.range(0, 6)); k <= n; ++k) ca.push_back(g.rational(9, 4));
    for (int k = 0, n = static_cast<int>(g.range(0, 4)); k <= n; ++k) cb.push_back(g.rational(9, 4));
    const UniPoly a(ca), b(cb);
    if (b.is_zero()) continue;
    const auto [q, r] = divmod(a, b);
    REQUIRE(q * b + r == a);
    REQUIRE(r.degree() < b.degree());
    const UniPoly d = gcd(a, b);
    if (!d.is_zero()) {
      REQUIRE(divmod(a, d).second.is_zero());
      REQUIRE(divmod(b, d).second.is_zero());
      REQUIRE(d.leading() == Rational(1));
    }
  }
  const UniPoly p = from_roots({1, 1, 2, Rational(1, 3), Rational(1, 3), Rational(1, 3)});
  CHECK(p.square_free_part().monic() == from_roots({1, 2, Rational(1, 3)}).monic());
  CHECK_THROWS_AS(divmod(p, UniPoly()), AlgebraError);
  CHECK_THROWS_AS(exact_quotient(UniPoly{1, 0, 1}, UniPoly{1, 1}), AlgebraError);
  CHECK(discriminant(UniPoly{1, 0, 1}) == Rational(-4));
  CHECK_THROWS_AS(discriminant(UniPoly{1, 1}), AlgebraError);
}

TEST_CASE("sturm counts match polynomials built from known roots") {
  oracle::Gen g(99);
  for (int i = 0; i < 300; ++i) {
    std::vector<Rational> roots;
    std::set<Rational> distinct;
    for (int k = 0, n = static_cast<int>(g.range(1, 6)); k < n; ++k) {
      // Repeats on purpose.
      Rational r = g.range(0, 3) == 0 && !roots.empty() ? roots.front() : g.rational(12, 5);
      roots.push_back(r);
      distinct.insert(r);
    }
    UniPoly p = from_roots(roots);
    // Irreducible quadratic factors add no real roots.
    if (g.coin()) p *= UniPoly{g.rational(9, 3).abs() + Rational(1, 7), Rational(0), Rational(1)};
    p = Rational(g.range(1, 5)) * p;
    REQUIRE(count_real_roots(p) == distinct.size());

    const Rational lo = g.rational(12, 3);
    const Rational hi = lo + Rational(g.range(1, 20), g.range(1, 3));
    std::size_t inside = 0;
    for (const auto& r : distinct) inside += (lo < r && r < hi) ? 1 : 0;
    REQUIRE(count_real_roots(p, OpenInterval{lo, hi}) == inside);
  }
  CHECK(count_real_roots(UniPoly{5}) == 0);
  CHECK_THROWS_AS(count_real_roots(UniPoly()), AlgebraError);
  // Roots on both endpoints are excluded from the open interval.
  CHECK(count_real_roots(from_roots({0, 1}), OpenInterval{0, 1}) == 0);
  CHECK(count_real_roots(from_roots({0, Rational(1, 2), 1}), OpenInterval{0, 1}) == 1);
}

TEST_CASE("bivariate evaluation and coefficient extraction") {
  const BiPoly f = BiPoly::x() * BiPoly::x() + BiPoly::term(3, 1, 2) - BiPoly::constant(7);
  CHECK(f(Rational(2), Rational(1)) == Rational(3));
  CHECK(f(Rational(1), Rational(-2)) == Rational(6));
  CHECK(f.total_degree() == 3);
  CHECK(f.degree_in(Var::X) == 2);
  CHECK(f.degree_in(Var::Y) == 2);
  const auto cx = f.coefficients_in(Var::X);
  REQUIRE(cx.size() == 3);
  CHECK(cx[0] == UniPoly{-7});
  CHECK(cx[1] == UniPoly{0, 0, 3});
  CHECK(cx[2] == UniPoly{1});
}

TEST_CASE("resultant equals the product of g over the roots of f") {
  oracle::Gen g(3);
  for (int i = 0; i < 150; ++i) {
    // f = (x - r1)(x - r2) (x - r3); Res_x(f, g) = prod g(r_i, y) for monic f.
    std::vector<Rational> roots;
    for (int k = 0, n = static_cast<int>(g.range(1, 3)); k < n; ++k) roots.push_back(g.rational(6, 3));
    BiPoly f = BiPoly::constant(1);
    for (const auto& r : roots) f = f * (BiPoly::x() - BiPoly::constant(r));
    BiPoly h;
    for (unsigned a = 0; a <= 2; ++a) {
      for (unsigned b = 0; b + a <= 2; ++b) h = h + BiPoly::term(g.rational(5, 2), a, b);
    }
    if (h.degree_in(Var::X) < 1) h = h + BiPoly::x();
    UniPoly expected = UniPoly::constant(1);
    for (const auto& r : roots) {
      UniPoly hr;
      for (const auto& [e, c] : h.terms()) {
        Rational coef = c;
        for (unsigned k = 0; k < e.first; ++k) coef *= r;
        hr += UniPoly::monomial(coef, static_cast<int>(e.second));
      }
      expected *= hr;
    }
    REQUIRE(resultant(f, h, Var::X) == expected);
  }
  CHECK_THROWS_AS(resultant(BiPoly::y(), BiPoly::x(), Var::X), AlgebraError);
  CHECK_THROWS_AS(resultant(BiPoly(), BiPoly::x(), Var::X), AlgebraError);
}

TEST_CASE("bareiss determinant agrees with cofactor expansion") {
  oracle::Gen g(8);
  for (int i = 0; i < 100; ++i) {
    std::vector<std::vector<UniPoly>> m(3, std::vector<UniPoly>(3));
    for (auto& row : m) {
      for (auto& e : row) e = UniPoly{g.rational(4, 2), g.rational(4, 2)};
    }
    const UniPoly expected = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                             m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    REQUIRE(bareiss_determinant(m) == expected);
  }
  // A zero pivot forces a row swap.
  std::vector<std::vector<UniPoly>> swap_needed = {{UniPoly(), UniPoly{1}}, {UniPoly{1}, UniPoly()}};
  CHECK(bareiss_determinant(swap_needed) == UniPoly{-1});
}

TEST_CASE("small elimination and root-count examples") {
  const BiPoly x = BiPoly::x(), y = BiPoly::y();
  const BiPoly one = BiPoly::constant(1);
  const UniPoly r1 = resultant(x - y, x + y, Var::Y);
  CHECK((r1 == UniPoly{0, 2} || r1 == UniPoly{0, -2}));
  CHECK(resultant(x * x + y * y - one, y, Var::Y) == UniPoly{-1, 0, 1});
  const UniPoly r3 = resultant(x * x + y * y - one, x - y, Var::Y);
  CHECK(r3.monic() == UniPoly{Rational(-1, 2), 0, 1});

  CHECK(count_real_roots(UniPoly{-2, 0, 1}) == 2);
  CHECK(count_real_roots(UniPoly{1, 0, 1}) == 0);
  CHECK(count_real_roots(from_roots({1, 1, -3})) == 2);

  CHECK(discriminant(UniPoly{-1, 0, 1}) == Rational(4));
  CHECK(discriminant(UniPoly{1, 2, 1}) == Rational(0));
  CHECK(discriminant(UniPoly{-5, 3, 2}) == Rational(49));
}
