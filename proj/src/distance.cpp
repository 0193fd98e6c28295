#include "distdist/distance.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "distdist/error.hpp"
#include "distdist/parallel.hpp"

namespace distdist::analysis {
namespace {

void require_disjoint(const PointSet& p1, const PointSet& p2) {
  std::unordered_set<ExactPoint, ExactPointHash> first(p1.begin(), p1.end());
  for (const auto& q : p2) {
    if (first.count(q)) throw InputError("P1 and P2 share the point " + q.to_string());
  }
}

// Center of the circle through a, b and k is mid(a,b) + t * perp(b - a);
// returns t, or nullopt when k is on the line ab.
struct BisectorFrame {
  ExactPoint mid;
  ExactPoint perp;
};

BisectorFrame bisector(const ExactPoint& a, const ExactPoint& b) {
  return {{(a.x + b.x) / Rational(2), (a.y + b.y) / Rational(2)}, {a.y - b.y, b.x - a.x}};
}

}  // namespace

std::vector<Rational> distinct_squared_distances(const PointSet& p) {
  if (p.size() < 2) throw InputError("distinct distances need at least two points");
  const auto& pts = p.points();
  auto chunks = map_chunks<std::vector<Rational>>(pts.size(), [&](std::size_t b, std::size_t e) {
    std::vector<Rational> out;
    for (std::size_t i = b; i < e; ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) out.push_back(squared_distance(pts[i], pts[j]));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  });
  std::vector<Rational> all;
  for (auto& c : chunks) all.insert(all.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

std::size_t distinct_distances(const PointSet& p) { return distinct_squared_distances(p).size(); }

std::vector<std::uint64_t> DistanceClassPartition::class_sizes() const {
  std::vector<std::uint64_t> sizes;
  sizes.reserve(classes.size());
  for (const auto& c : classes) sizes.push_back(c.pairs.size());
  return sizes;
}

std::uint64_t DistanceClassPartition::pair_count() const {
  std::uint64_t total = 0;
  for (const auto& c : classes) total += c.pairs.size();
  return total;
}

DistanceClassPartition bipartite_distances(const PointSet& p1, const PointSet& p2) {
  if (p1.empty() || p2.empty()) throw InputError("bipartite distances need two nonempty sets");
  require_disjoint(p1, p2);
  std::unordered_map<Rational, std::vector<std::pair<std::uint32_t, std::uint32_t>>> groups;
  for (std::uint32_t i = 0; i < p1.size(); ++i) {
    for (std::uint32_t j = 0; j < p2.size(); ++j) groups[squared_distance(p1[i], p2[j])].emplace_back(i, j);
  }
  DistanceClassPartition out{p1, p2, {}};
  out.classes.reserve(groups.size());
  for (auto& [key, pairs] : groups) out.classes.push_back({key, std::move(pairs)});
  std::sort(out.classes.begin(), out.classes.end(),
            [](const DistanceClass& a, const DistanceClass& b) { return a.squared_distance < b.squared_distance; });
  return out;
}

Line Line::through(const ExactPoint& a, const ExactPoint& b) {
  if (a == b) throw InputError("a line needs two distinct points");
  if (a.x == b.x) return vertical(a.x);
  Rational slope = (b.y - a.y) / (b.x - a.x);
  return sloped(slope, a.y - slope * a.x);
}

bool Line::contains(const ExactPoint& p) const {
  if (vertical_) return p.x == offset_;
  return p.y == slope_ * p.x + offset_;
}

std::string Line::to_string() const {
  if (vertical_) return "x = " + offset_.to_string();
  return "y = " + slope_.to_string() + "*x + " + offset_.to_string();
}

LineCount max_collinear(const PointSet& p) {
  if (p.size() < 2) throw InputError("max_collinear needs at least two points");
  const auto& pts = p.points();
  const std::size_t n = pts.size();
  struct Best {
    std::size_t count = 0;
    std::size_t anchor = 0;
    bool vertical = false;
    Rational slope;
  };
  auto chunks = map_chunks<Best>(n - 1, [&](std::size_t b, std::size_t e) {
    Best best;
    std::vector<Rational> slopes;
    for (std::size_t i = b; i < e; ++i) {
      slopes.clear();
      std::size_t verticals = 0;
      for (std::size_t j = i + 1; j < n; ++j) {
        Rational dx = pts[j].x - pts[i].x;
        if (dx.is_zero()) {
          ++verticals;
        } else {
          slopes.push_back((pts[j].y - pts[i].y) / dx);
        }
      }
      std::sort(slopes.begin(), slopes.end());
      for (std::size_t s = 0; s < slopes.size();) {
        std::size_t t = s;
        while (t < slopes.size() && slopes[t] == slopes[s]) ++t;
        if (t - s + 1 > best.count) best = {t - s + 1, i, false, slopes[s]};
        s = t;
      }
      if (verticals > 0 && verticals + 1 > best.count) best = {verticals + 1, i, true, Rational()};
    }
    return best;
  });
  Best best;
  for (auto& c : chunks) {
    if (c.count > best.count) best = std::move(c);
  }
  const ExactPoint& a = pts[best.anchor];
  Line line = best.vertical ? Line::vertical(a.x) : Line::sloped(best.slope, a.y - best.slope * a.x);
  return {line, best.count};
}

std::optional<Circle> circumcircle(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c) {
  BisectorFrame f = bisector(a, b);
  ExactPoint ac{c.x - a.x, c.y - a.y};
  Rational den = Rational(2) * dot(f.perp, ac);
  if (den.is_zero()) return std::nullopt;
  Rational num = c.norm2() - a.norm2() - dot({a.x + b.x, a.y + b.y}, ac);
  Rational t = num / den;
  ExactPoint center{f.mid.x + t * f.perp.x, f.mid.y + t * f.perp.y};
  return Circle{center, squared_distance(center, a)};
}

std::optional<CircleCount> max_concyclic(const PointSet& p) {
  if (p.size() < 3) throw InputError("max_concyclic needs at least three points");
  const auto& pts = p.points();
  const std::size_t n = pts.size();
  std::vector<Rational> norms;
  norms.reserve(n);
  for (const auto& q : pts) norms.push_back(q.norm2());

  struct Best {
    std::size_t count = 0;
    std::size_t i = 0, j = 0, k = 0;
  };
  // A circle is found from its two lowest-index points i < j: every other
  // point k > j on it shares the same bisector parameter t.
  auto chunks = map_chunks<Best>(n - 2, [&](std::size_t b, std::size_t e) {
    Best best;
    std::vector<std::pair<Rational, std::size_t>> params;
    std::vector<ExactPoint> offsets(n);
    for (std::size_t i = b; i < e; ++i) {
      for (std::size_t k = i + 1; k < n; ++k) offsets[k] = {pts[k].x - pts[i].x, pts[k].y - pts[i].y};
      for (std::size_t j = i + 1; j + 1 < n; ++j) {
        BisectorFrame f = bisector(pts[i], pts[j]);
        ExactPoint sum{pts[i].x + pts[j].x, pts[i].y + pts[j].y};
        params.clear();
        for (std::size_t k = j + 1; k < n; ++k) {
          Rational den = dot(f.perp, offsets[k]);
          if (den.is_zero()) continue;
          Rational num = norms[k] - norms[i] - dot(sum, offsets[k]);
          params.emplace_back(num / den, k);
        }
        std::sort(params.begin(), params.end());
        for (std::size_t s = 0; s < params.size();) {
          std::size_t t = s;
          while (t < params.size() && params[t].first == params[s].first) ++t;
          if (t - s + 2 > best.count) best = {t - s + 2, i, j, params[s].second};
          s = t;
        }
      }
    }
    return best;
  });
  Best best;
  for (const auto& c : chunks) {
    if (c.count > best.count) best = c;
  }
  if (best.count == 0) return std::nullopt;
  auto circle = circumcircle(pts[best.i], pts[best.j], pts[best.k]);
  return CircleCount{*circle, best.count};
}

double richness_exponent(std::size_t count, std::size_t n) {
  if (n < 2 || count == 0) return 0.0;
  return std::log(static_cast<double>(count)) / std::log(static_cast<double>(n));
}

HeavyCurveReport heavy_curves(const PointSet& p, bool include_circles) {
  HeavyCurveReport r;
  r.n = p.size();
  r.distinct = distinct_distances(p);
  r.best_line = max_collinear(p);
  r.line_exponent = richness_exponent(r.best_line.count, r.n);
  if (include_circles && p.size() >= 3) {
    r.best_circle = max_concyclic(p);
    if (r.best_circle) r.circle_exponent = richness_exponent(r.best_circle->count, r.n);
  }
  return r;
}

}  // namespace distdist::analysis
