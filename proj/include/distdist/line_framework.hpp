#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "distdist/exact/bipoly.hpp"
#include "distdist/point.hpp"
#include "distdist/quadruples.hpp"

namespace distdist::line {

// P1 must lie on the x-axis and P2 must avoid it; throws InputError naming
// the first misplaced point.
void validate_split(const PointSet& p1, const PointSet& p2);

// Degenerate slice: p_y^2 == q_y^2.
Rational slice_key(const ExactPoint& p);

QuadrupleStats build_quadruple_stats(const PointSet& p1, const PointSet& p2);

// Explicit enumeration over the distance classes. Throws SizeGuardError when
// |P1| * |P2| > kEnumerationGuard unless forced.
QuadrupleStats enumerate_quadruples(const PointSet& p1, const PointSet& p2, bool force = false);

// For every (a, b, p) counts the q completing a degenerate quadruple
// (q_y^2 = p_y^2, |ap| = |bq|, (b, q) != (a, p)); the bound is 4.
ChoiceBoundReport q1_choice_bound_check(const PointSet& p1, const PointSet& p2);

// Two pairs give the same hyperbola iff these agree.
struct HyperbolaKey {
  Rational px;
  Rational qx;
  Rational gap;  // q_y^2 - p_y^2

  friend bool operator==(const HyperbolaKey&, const HyperbolaKey&) = default;
  friend auto operator<=>(const HyperbolaKey&, const HyperbolaKey&) = default;
};

struct HyperbolaKeyHash {
  std::size_t operator()(const HyperbolaKey& k) const noexcept {
    return (k.px.hash() * 31 + k.qx.hash()) * 0x9e3779b97f4a7c15ULL ^ k.gap.hash();
  }
};

// Zero set of (x - p_x)^2 + p_y^2 - (y - q_x)^2 - q_y^2, which encodes
// |ap| = |bq| for a = (x, 0), b = (y, 0).
class HyperbolaCurve {
 public:
  // Throws InputError when p_y^2 == q_y^2 (the curve degenerates).
  HyperbolaCurve(ExactPoint p, ExactPoint q);

  const ExactPoint& p() const { return p_; }
  const ExactPoint& q() const { return q_; }
  HyperbolaKey key() const { return {p_.x, q_.x, q_.y * q_.y - p_.y * p_.y}; }
  exact::BiPoly polynomial() const;
  bool contains(const Rational& x, const Rational& y) const;

 private:
  ExactPoint p_;
  ExactPoint q_;
};

struct HyperbolaClass {
  HyperbolaKey key;
  ExactPoint p;  // first pair seen with this key
  ExactPoint q;
  std::uint64_t multiplicity = 0;

  HyperbolaCurve curve() const { return {p, q}; }
};

// The multiset of curves over ordered pairs p != q of P2 with
// p_y^2 != q_y^2, grouped into classes of equal curves.
struct HyperbolaFamily {
  std::vector<HyperbolaClass> classes;  // first-seen order
  std::uint64_t gamma_size = 0;
  std::uint64_t skipped_degenerate = 0;
  std::uint64_t max_multiplicity = 0;
};

HyperbolaFamily build_hyperbola_family(const PointSet& p2);

// x-coordinates of P1; V is their Cartesian square.
std::vector<Rational> axis_coordinates(const PointSet& p1);

// sum over curves (with multiplicity) of |{(a, b) in V : f(a, b) = 0}|,
// solving f = 0 for the second coordinate per class.
std::uint64_t count_incidences_line(const std::vector<Rational>& axis, const HyperbolaFamily& family);

struct IncidenceLedger {
  std::vector<Rational> axis;
  HyperbolaFamily family;
  std::uint64_t incidences = 0;

  std::uint64_t vertex_count() const { return static_cast<std::uint64_t>(axis.size()) * axis.size(); }
};

IncidenceLedger build_incidence_ledger(const PointSet& p1, const PointSet& p2);

struct MultiplicityReport {
  std::uint64_t t = 0;
  std::size_t v_max = 0;
  std::optional<Rational> vertical_x;  // x of a richest vertical line
  bool holds = true;                   // t <= 2 v_max
};

MultiplicityReport multiplicity_vs_vertical_lines(const PointSet& p2, const HyperbolaFamily& family);

struct EnrReport {
  std::size_t a_size = 0;
  std::size_t b_size = 0;
  std::size_t difference_size = 0;   // |A - A|
  std::size_t square_sum_size = 0;   // |A^2 + B^2|
  std::uint64_t product = 0;
  std::size_t max = 0;
  double rhs = 0.0;                  // |A|^{3/2} (|A| |B|)^{1/2}
  double ratio = 0.0;                // product / rhs
};

// Sizes of A - A and A^2 + B^2 for finite sets (duplicates ignored).
// Throws InputError if either is empty.
EnrReport enr_products(const std::vector<Rational>& a, const std::vector<Rational>& b);

// A = x-coordinates of P1 and B = y-coordinates of P2 on its richest
// vertical line x = x_v, after translating (x_v, 0) to the origin.
EnrReport enr_for_split(const PointSet& p1, const PointSet& p2);

// Distinct real intersection points of two different hyperbolas, via the
// resultant of f and f - f'. Throws AlgebraError when the curves coincide.
std::size_t hyperbola_intersection_count(const HyperbolaCurve& c1, const HyperbolaCurve& c2);

struct DegreesOfFreedomReport {
  std::uint64_t pairs_checked = 0;
  std::size_t max_count = 0;
  std::uint64_t violations = 0;  // pairs meeting in more than two points
  bool exhaustive = false;
  std::array<std::uint64_t, 3> histogram{};  // pairs meeting in 0, 1, 2 points
};

// All class pairs when there are at most `exhaustive_limit` classes,
// otherwise `samples` random pairs drawn from `seed`.
DegreesOfFreedomReport degrees_of_freedom_check_line(const HyperbolaFamily& family, std::size_t exhaustive_limit = 200,
                                                     std::size_t samples = 10000, std::uint64_t seed = 0);

struct LineAnalysis {
  std::size_t n = 0;
  std::size_t p1_size = 0;
  std::size_t p2_size = 0;
  double alpha = 0.0;  // log |P1| / log n
  QuadrupleStats stats;
  std::uint64_t incidences = 0;
  std::uint64_t gamma_size = 0;
  std::uint64_t class_count = 0;
  std::uint64_t skipped_degenerate = 0;
  MultiplicityReport multiplicity;
  EnrReport enr;

  bool consistent() const {
    return incidences == stats.q2 && stats.q_total == stats.q1 + stats.q2 && stats.cauchy_schwarz_holds() &&
           multiplicity.holds;
  }
};

LineAnalysis analyze_line_split(const PointSet& p1, const PointSet& p2);

}  // namespace distdist::line
