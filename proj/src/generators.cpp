#include "distdist/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <unordered_set>

#include "distdist/error.hpp"
#include "distdist/rng.hpp"

namespace distdist::gen {
namespace {

std::int64_t as_i64(std::size_t v) { return static_cast<std::int64_t>(v); }

bool is_axis_parameter(const Rational& t) { return t.is_zero() || t == Rational(1) || t == Rational(-1); }

}  // namespace

PointSet lattice(std::size_t width, std::size_t height) {
  if (width == 0 || height == 0) throw InputError("lattice dimensions must be positive");
  std::vector<ExactPoint> pts;
  pts.reserve(width * height);
  for (std::size_t j = 0; j < height; ++j) {
    for (std::size_t i = 0; i < width; ++i) pts.push_back({as_i64(i), as_i64(j)});
  }
  return PointSet(std::move(pts), "lattice " + std::to_string(width) + "x" + std::to_string(height));
}

PointSet uneven_lattice(std::size_t n, double alpha) {
  if (n < 2) throw InputError("uneven lattice needs n >= 2");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw InputError("alpha must lie in (0, 1]");
  auto width = static_cast<std::size_t>(std::llround(std::pow(static_cast<double>(n), alpha)));
  width = std::max<std::size_t>(width, 1);
  auto height = static_cast<std::size_t>(std::llround(static_cast<double>(n) / static_cast<double>(width)));
  height = std::max<std::size_t>(height, 2);
  return lattice(width, height);
}

PointSet line_points(std::size_t n, const SpacingSpec& spacing, const LineSpec& line) {
  if (n < 2) throw InputError("line_points needs n >= 2");
  std::vector<Rational> xs;
  xs.reserve(n);
  switch (spacing.kind) {
    case Spacing::Even:
      for (std::size_t i = 0; i < n; ++i) xs.emplace_back(as_i64(i));
      break;
    case Spacing::Geometric: {
      if (spacing.ratio.sign() <= 0 || spacing.ratio == Rational(1)) {
        throw InputError("geometric spacing needs a positive ratio other than 1");
      }
      Rational x = 1;
      for (std::size_t i = 0; i < n; ++i) {
        xs.push_back(x);
        x *= spacing.ratio;
      }
      break;
    }
    case Spacing::Random: {
      Rng rng(spacing.seed);
      std::unordered_set<Rational> seen;
      std::size_t attempts = 0;
      while (xs.size() < n) {
        if (++attempts > 64 * n + 1024) throw InputError("random spacing: bit budget too small for n distinct points");
        Rational x = rng.rational(spacing.num_bits, spacing.den_bits);
        if (seen.insert(x).second) xs.push_back(x);
      }
      break;
    }
  }
  std::vector<ExactPoint> pts;
  pts.reserve(n);
  for (const auto& x : xs) pts.push_back({x, line.slope * x + line.intercept});
  return PointSet(std::move(pts), "line " + std::to_string(n));
}

ExactPoint circle_point(const Rational& t) {
  Rational t2 = t * t;
  Rational w = Rational(1) + t2;
  return {(Rational(1) - t2) / w, Rational(2) * t / w};
}

PointSet circle_points(std::span<const Rational> t_values, bool avoid_axes) {
  if (t_values.size() < 2) throw InputError("circle_points needs at least two parameters");
  std::unordered_set<Rational> seen;
  std::vector<ExactPoint> pts;
  pts.reserve(t_values.size());
  for (const auto& t : t_values) {
    if (!seen.insert(t).second) throw InputError("duplicate circle parameter " + t.to_string());
    if (avoid_axes && is_axis_parameter(t)) {
      throw InputError("circle parameter " + t.to_string() + " puts a point on a coordinate axis");
    }
    pts.push_back(circle_point(t));
  }
  return PointSet(std::move(pts), "circle " + std::to_string(pts.size()));
}

PointSet random_circle_points(std::size_t n, std::uint64_t seed, unsigned bits, bool avoid_axes) {
  if (n < 2) throw InputError("circle_points needs n >= 2");
  Rng rng(seed);
  std::unordered_set<Rational> seen;
  std::vector<Rational> ts;
  std::size_t attempts = 0;
  while (ts.size() < n) {
    if (++attempts > 64 * n + 1024) throw InputError("random circle: bit budget too small for n distinct points");
    Rational t = rng.rational(bits, bits);
    if (avoid_axes && is_axis_parameter(t)) continue;
    if (seen.insert(t).second) ts.push_back(t);
  }
  return circle_points(ts, avoid_axes);
}

std::vector<Rational> gaussian_circle_parameters(std::int64_t norm, bool avoid_axes) {
  if (norm < 1) throw InputError("gaussian_circle_parameters needs a positive norm");
  std::vector<Rational> ts;
  for (std::int64_t u = 1; u * u <= norm; ++u) {
    std::int64_t rest = norm - u * u;
    auto v = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(rest))));
    while (v * v > rest) --v;
    while ((v + 1) * (v + 1) <= rest) ++v;
    if (v * v != rest) continue;
    for (std::int64_t s : {v, -v}) {
      Rational t(s, u);
      if (avoid_axes && is_axis_parameter(t)) continue;
      if (std::find(ts.begin(), ts.end(), t) == ts.end()) ts.push_back(t);
    }
  }
  std::sort(ts.begin(), ts.end());
  return ts;
}

PointSet off_axis_ambient(std::size_t count) {
  std::vector<ExactPoint> pts;
  pts.reserve(count);
  for (std::int64_t ring = 1; pts.size() < count; ++ring) {
    for (std::int64_t x = -ring; x <= ring && pts.size() < count; ++x) {
      for (std::int64_t y = -ring; y <= ring && pts.size() < count; ++y) {
        if (x == 0 || y == 0) continue;
        if (std::max(std::llabs(x), std::llabs(y)) != ring) continue;
        pts.push_back({x, y});
      }
    }
  }
  return PointSet(std::move(pts), "off-axis ambient " + std::to_string(count));
}

PointSet random_points(std::size_t count, std::uint64_t seed, unsigned num_bits, unsigned den_bits) {
  Rng rng(seed);
  std::unordered_set<ExactPoint, ExactPointHash> seen;
  std::vector<ExactPoint> pts;
  std::size_t attempts = 0;
  while (pts.size() < count) {
    if (++attempts > 64 * count + 1024) throw InputError("random_points: bit budget too small");
    ExactPoint p{rng.rational(num_bits, den_bits), rng.rational(num_bits, den_bits)};
    if (seen.insert(p).second) pts.push_back(p);
  }
  return PointSet(std::move(pts), "random " + std::to_string(count));
}

PointSet translate(const PointSet& p, const Rational& dx, const Rational& dy) {
  std::vector<ExactPoint> pts;
  pts.reserve(p.size());
  for (const auto& q : p) pts.push_back({q.x + dx, q.y + dy});
  return PointSet(std::move(pts), p.label());
}

PointSet rotate(const PointSet& p, const Rational& c, const Rational& s) {
  if (c * c + s * s != Rational(1)) throw InputError("rotation needs cos^2 + sin^2 = 1");
  std::vector<ExactPoint> pts;
  pts.reserve(p.size());
  for (const auto& q : p) pts.push_back({c * q.x - s * q.y, s * q.x + c * q.y});
  return PointSet(std::move(pts), p.label());
}

PointSet Composite::primary() const {
  std::vector<ExactPoint> pts;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (provenance[i] == Part::Primary) pts.push_back(all[i]);
  }
  return PointSet(std::move(pts), all.label() + " [primary]");
}

PointSet Composite::ambient() const {
  std::vector<ExactPoint> pts;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (provenance[i] == Part::Ambient) pts.push_back(all[i]);
  }
  return PointSet(std::move(pts), all.label() + " [ambient]");
}

Composite composite(const PointSet& primary, const PointSet& ambient) {
  std::vector<std::string> shared;
  for (const auto& p : ambient) {
    if (primary.contains(p)) shared.push_back(p.to_string());
  }
  if (!shared.empty()) {
    std::string msg = "composite parts overlap at";
    for (const auto& s : shared) msg += " " + s;
    throw InputError(msg);
  }
  std::vector<ExactPoint> pts(primary.begin(), primary.end());
  pts.insert(pts.end(), ambient.begin(), ambient.end());
  std::vector<Part> prov(primary.size(), Part::Primary);
  prov.insert(prov.end(), ambient.size(), Part::Ambient);
  std::string label = primary.label();
  if (!ambient.empty()) label += " + " + ambient.label();
  return {PointSet(std::move(pts), label), std::move(prov)};
}

Composite split_on_x_axis(const PointSet& p) {
  std::vector<Part> prov;
  prov.reserve(p.size());
  for (const auto& q : p) prov.push_back(q.y.is_zero() ? Part::Primary : Part::Ambient);
  return {p, std::move(prov)};
}

Composite split_on_unit_circle(const PointSet& p) {
  std::vector<Part> prov;
  prov.reserve(p.size());
  for (const auto& q : p) prov.push_back(q.norm2() == Rational(1) ? Part::Primary : Part::Ambient);
  return {p, std::move(prov)};
}

namespace {

std::size_t primary_size(std::size_t n, double alpha) {
  if (n < 2) throw InputError("random split needs n >= 2");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw InputError("random split needs alpha in (0, 1]");
  auto k = static_cast<std::size_t>(std::llround(std::pow(static_cast<double>(n), alpha)));
  return std::clamp<std::size_t>(k, 1, n - 1);
}

// Fisher-Yates on the first `count` slots.
template <class T>
void partial_shuffle(std::vector<T>& v, std::size_t count, Rng& rng) {
  for (std::size_t i = 0; i < count && i < v.size(); ++i) {
    std::swap(v[i], v[i + rng.below(v.size() - i)]);
  }
}

// 5 * 13 * 17 * 29 * 37 * 41: 128 lattice points on the circle of this norm.
constexpr std::int64_t kRichNorm = 5LL * 13 * 17 * 29 * 37 * 41;

}  // namespace

Composite random_line_split(std::size_t n, double alpha, std::uint64_t seed) {
  const std::size_t k = primary_size(n, alpha);
  Rng rng(seed);
  const auto span = as_i64(k);
  std::vector<std::int64_t> xs;
  for (std::int64_t x = -span; x <= span; ++x) xs.push_back(x);
  partial_shuffle(xs, k, rng);
  std::vector<ExactPoint> p1;
  for (std::size_t i = 0; i < k; ++i) p1.push_back({xs[i], 0});
  std::sort(p1.begin(), p1.end());

  const std::size_t rest = n - k;
  const std::int64_t width = 2 * span + 1;
  const std::int64_t half_height = std::max<std::int64_t>(1, (as_i64(rest) + 2 * width - 1) / (2 * width) + 1);
  std::vector<ExactPoint> box;
  for (std::int64_t y = -half_height; y <= half_height; ++y) {
    if (y == 0) continue;
    for (std::int64_t x = -span; x <= span; ++x) box.push_back({x, y});
  }
  partial_shuffle(box, rest, rng);
  box.resize(rest);
  return composite(PointSet(std::move(p1), "axis " + std::to_string(k)),
                   PointSet(std::move(box), "box " + std::to_string(rest)));
}

Composite random_circle_split(std::size_t n, double alpha, std::uint64_t seed) {
  const std::size_t k = primary_size(n, alpha);
  if (k < 2) throw InputError("random circle split needs at least two circle points");
  Rng rng(seed);
  std::vector<Rational> ts = gaussian_circle_parameters(kRichNorm);
  partial_shuffle(ts, k, rng);
  if (ts.size() > k) ts.resize(k);
  std::unordered_set<Rational> seen(ts.begin(), ts.end());
  while (ts.size() < k) {
    Rational t = rng.rational(8, 8);
    if (is_axis_parameter(t)) continue;
    if (seen.insert(t).second) ts.push_back(t);
  }
  PointSet p1 = circle_points(ts);

  const std::size_t rest = n - k;
  std::unordered_set<ExactPoint, ExactPointHash> taken;
  std::vector<ExactPoint> p2;
  const auto box = std::max<std::int64_t>(3, as_i64(rest) / 4 + 2);
  while (p2.size() < rest) {
    ExactPoint p;
    if (rng.below(2) == 0) {
      const ExactPoint& a = p1[rng.below(p1.size())];
      const Rational scale(rng.between(2, 4));
      p = {a.x * scale, a.y * scale};
    } else {
      p = {rng.between(-box, box), rng.between(-box, box)};
      if (p.on_axis()) continue;
    }
    if (taken.insert(p).second) p2.push_back(std::move(p));
  }
  return composite(p1.relabeled("circle " + std::to_string(k)), PointSet(std::move(p2), "ambient " + std::to_string(rest)));
}

}  // namespace distdist::gen
