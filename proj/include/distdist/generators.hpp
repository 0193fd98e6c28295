#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "distdist/point.hpp"

namespace distdist::gen {

// {0..width-1} x {0..height-1}, row by row starting at the origin.
PointSet lattice(std::size_t width, std::size_t height);

// width = round(n^alpha), height = max(2, round(n / width)). The bottom row
// plays the part of the rich line; height never drops to 1 so the
// off-line part stays nonempty.
PointSet uneven_lattice(std::size_t n, double alpha);

struct LineSpec {
  Rational slope = 0;
  Rational intercept = 0;
};

enum class Spacing { Even, Geometric, Random };

struct SpacingSpec {
  Spacing kind = Spacing::Even;
  Rational ratio = 2;           // Geometric: x_i = ratio^i
  std::uint64_t seed = 0;       // Random
  unsigned num_bits = 10;       // Random: |numerator| < 2^num_bits
  unsigned den_bits = 0;        // Random: denominator in [1, 2^den_bits]
};

PointSet line_points(std::size_t n, const SpacingSpec& spacing, const LineSpec& line = {});

// ((1-t^2)/(1+t^2), 2t/(1+t^2)).
ExactPoint circle_point(const Rational& t);

// One point per parameter. Throws InputError on repeated parameters, fewer
// than two parameters, or (with avoid_axes) t in {0, 1, -1}.
PointSet circle_points(std::span<const Rational> t_values, bool avoid_axes = true);

// n points from random parameters with |num| < 2^bits and den <= 2^bits;
// axis parameters are redrawn when avoid_axes is set.
PointSet random_circle_points(std::size_t n, std::uint64_t seed, unsigned bits = 8, bool avoid_axes = true);

// Parameters t = v/u for every u > 0, v with u^2 + v^2 = norm. The
// resulting circle points all have denominators dividing `norm`, which makes
// sets with many repeated angle differences.
std::vector<Rational> gaussian_circle_parameters(std::int64_t norm, bool avoid_axes = true);

// First `count` integer points off both axes, ordered by ring
// max(|x|,|y|) and then lexicographically. None lies on the unit circle.
PointSet off_axis_ambient(std::size_t count);

// `count` distinct points with coordinates drawn by Rng::rational.
PointSet random_points(std::size_t count, std::uint64_t seed, unsigned num_bits, unsigned den_bits);

PointSet translate(const PointSet& p, const Rational& dx, const Rational& dy);
// Rotation by the angle with the given cosine and sine; requires c^2+s^2 = 1.
PointSet rotate(const PointSet& p, const Rational& c, const Rational& s);

enum class Part : std::uint8_t { Primary, Ambient };

// Union of a line/circle part and the ambient points, with the origin of
// every point recorded so the split is recovered exactly.
struct Composite {
  PointSet all;
  std::vector<Part> provenance;

  PointSet primary() const;
  PointSet ambient() const;
};

// Throws InputError listing the shared points when the parts overlap.
Composite composite(const PointSet& primary, const PointSet& ambient);

// Primary part = points with y == 0.
Composite split_on_x_axis(const PointSet& p);
// Primary part = points with x^2 + y^2 == 1.
Composite split_on_unit_circle(const PointSet& p);

// Randomized splits for the two frameworks. The primary part has
// max(1, round(n^alpha)) points (at most n - 1).
//
// Line: integer x in [-k, k] on the x-axis against integer points with
// y != 0 in a box just large enough for the rest, so distances repeat often.
Composite random_line_split(std::size_t n, double alpha, std::uint64_t seed);

// Circle: points drawn from the Gaussian parameters of a highly composite
// norm (random parameters once those run out), against a mix of integer
// multiples of the circle points and integer points off both axes.
Composite random_circle_split(std::size_t n, double alpha, std::uint64_t seed);

}  // namespace distdist::gen
