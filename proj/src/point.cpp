#include "distdist/point.hpp"

#include <algorithm>
#include <unordered_set>

#include "distdist/error.hpp"

namespace distdist {

PointSet::PointSet(std::vector<ExactPoint> points, std::string label)
    : points_(std::move(points)), label_(std::move(label)) {
  std::unordered_set<ExactPoint, ExactPointHash> seen;
  seen.reserve(points_.size());
  for (const auto& p : points_) {
    if (!seen.insert(p).second) throw InputError("duplicate point " + p.to_string() + " in point set");
  }
}

bool PointSet::contains(const ExactPoint& p) const {
  return std::find(points_.begin(), points_.end(), p) != points_.end();
}

PointSet PointSet::relabeled(std::string label) const {
  PointSet out = *this;
  out.label_ = std::move(label);
  return out;
}

}  // namespace distdist
