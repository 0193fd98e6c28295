#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "distdist/point.hpp"

namespace distdist::analysis {

// Number of distinct distances among unordered pairs of P. Squared
// distances are compared, never distances. Throws InputError for |P| < 2.
std::size_t distinct_distances(const PointSet& p);

// The sorted distinct squared distances behind distinct_distances.
std::vector<Rational> distinct_squared_distances(const PointSet& p);

// All pairs (a, p) in P1 x P2 realizing one squared distance. Indices refer
// to positions in the two source sets.
struct DistanceClass {
  Rational squared_distance;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
};

struct DistanceClassPartition {
  PointSet p1;
  PointSet p2;
  // Sorted by squared distance.
  std::vector<DistanceClass> classes;

  std::size_t distance_count() const { return classes.size(); }
  std::vector<std::uint64_t> class_sizes() const;
  std::uint64_t pair_count() const;
};

// Partition of P1 x P2 by squared distance. Throws InputError when either
// side is empty or the sets share a point.
DistanceClassPartition bipartite_distances(const PointSet& p1, const PointSet& p2);

// y = slope * x + intercept, or x = x0 for a vertical line.
class Line {
 public:
  static Line sloped(Rational slope, Rational intercept) { return Line(false, std::move(slope), std::move(intercept)); }
  static Line vertical(Rational x0) { return Line(true, Rational(), std::move(x0)); }
  static Line through(const ExactPoint& a, const ExactPoint& b);

  bool is_vertical() const { return vertical_; }
  const Rational& slope() const { return slope_; }
  // Intercept on the y-axis, or the x position of a vertical line.
  const Rational& offset() const { return offset_; }
  bool contains(const ExactPoint& p) const;
  std::string to_string() const;

  friend bool operator==(const Line&, const Line&) = default;

 private:
  Line(bool vertical, Rational slope, Rational offset)
      : vertical_(vertical), slope_(std::move(slope)), offset_(std::move(offset)) {}
  bool vertical_;
  Rational slope_;
  Rational offset_;
};

struct Circle {
  ExactPoint center;
  Rational radius2;

  bool contains(const ExactPoint& p) const { return squared_distance(center, p) == radius2; }
  friend bool operator==(const Circle&, const Circle&) = default;
};

struct LineCount {
  Line line;
  std::size_t count;
};

struct CircleCount {
  Circle circle;
  std::size_t count;
};

// Exact maximum number of points of P on one line. Throws InputError for
// |P| < 2.
LineCount max_collinear(const PointSet& p);

// Exact maximum number of points of P on one circle; nullopt when every
// triple is collinear. Throws InputError for |P| < 3. Cubic in |P|.
std::optional<CircleCount> max_concyclic(const PointSet& p);

// Circumcircle of three points; nullopt for collinear points.
std::optional<Circle> circumcircle(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c);

struct HeavyCurveReport {
  std::size_t n = 0;
  std::size_t distinct = 0;
  LineCount best_line{Line::vertical(0), 0};
  std::optional<CircleCount> best_circle;
  double line_exponent = 0.0;
  std::optional<double> circle_exponent;
};

// log(count) / log(n); zero when n < 2.
double richness_exponent(std::size_t count, std::size_t n);

HeavyCurveReport heavy_curves(const PointSet& p, bool include_circles = true);

}  // namespace distdist::analysis
