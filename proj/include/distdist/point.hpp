#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "distdist/exact/rational.hpp"

namespace distdist {

using exact::Rational;

struct ExactPoint {
  Rational x;
  Rational y;

  Rational norm2() const { return x * x + y * y; }
  bool on_axis() const { return x.is_zero() || y.is_zero(); }
  std::string to_string() const { return "(" + x.to_string() + ", " + y.to_string() + ")"; }

  friend bool operator==(const ExactPoint&, const ExactPoint&) = default;
  friend auto operator<=>(const ExactPoint&, const ExactPoint&) = default;
};

inline Rational squared_distance(const ExactPoint& a, const ExactPoint& b) {
  Rational dx = a.x - b.x;
  Rational dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline Rational dot(const ExactPoint& a, const ExactPoint& b) { return a.x * b.x + a.y * b.y; }

struct ExactPointHash {
  std::size_t operator()(const ExactPoint& p) const noexcept { return p.x.hash() * 0x9e3779b97f4a7c15ULL ^ p.y.hash(); }
};

// Ordered set of distinct points. Construction throws InputError on a
// repeated point; iteration follows construction order.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<ExactPoint> points, std::string label = {});

  const std::vector<ExactPoint>& points() const { return points_; }
  const std::string& label() const { return label_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const ExactPoint& operator[](std::size_t i) const { return points_[i]; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  bool contains(const ExactPoint& p) const;
  PointSet relabeled(std::string label) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<ExactPoint> points_;
  std::string label_;
};

}  // namespace distdist
