#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "distdist/exact/rational.hpp"

namespace distdist::bounds {

using exact::Rational;

// Closed interval [lo, hi] known to contain the exact value.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double v) const { return lo <= v && v <= hi; }
};

// Incidence envelope for m points and N curves with k degrees of freedom,
// all O-constants set to one. `leading` is
//   t^{1/(2k-1)} m^{k/(2k-1)} N^{(2k-2)/(2k-1)},
// `point_term` is t m and `curve_term` is c N with c = max(1, ceil(log2 t)).
// Without multiplicity t = 1.
struct BoundEnvelope {
  std::uint64_t m = 0;
  std::uint64_t n_curves = 0;
  unsigned k = 0;
  std::uint64_t t = 1;
  Interval leading;
  Interval point_term;
  Interval curve_term;
  Interval total;
};

// Throws InputError unless m, N >= 1 and k >= 2.
BoundEnvelope envelope_ps(std::uint64_t m, std::uint64_t n_curves, unsigned k);

// Multiset version; additionally throws InputError when t = 0.
BoundEnvelope envelope_mult(std::uint64_t m, std::uint64_t n_curves, unsigned k, std::uint64_t t);

// ceil(log2 t) floored at one.
std::uint64_t log_coefficient(std::uint64_t t);

// c0 + c1 alpha, used for exponents of n.
struct AffineExponent {
  Rational constant;
  Rational alpha;

  Rational at(const Rational& a) const { return constant + alpha * a; }
  std::string to_string() const;
  friend bool operator==(const AffineExponent&, const AffineExponent&) = default;
};

// Exponent of the leading term when m = n^{em}, N = n^{eN} (and t = n^{et}).
AffineExponent leading_exponent_ps(const AffineExponent& em, const AffineExponent& en, unsigned k);
AffineExponent leading_exponent_mult(const AffineExponent& em, const AffineExponent& en, const AffineExponent& et,
                                     unsigned k);

struct DyadicLevel {
  unsigned level = 0;                       // multiplicities in [2^level, 2^{level+1})
  std::vector<std::uint64_t> multiplicities;  // one entry per curve class
  std::uint64_t curves = 0;                 // sum of the multiplicities
};

struct DyadicPartition {
  std::vector<DyadicLevel> levels;  // increasing level, empty levels omitted
  std::uint64_t total = 0;          // |Gamma| counted with multiplicity

  // Sum over levels equals the multiset size.
  bool conserves() const;
  // |Gamma_i| <= |Gamma| / 2^i, where Gamma_i holds the classes of
  // multiplicity at least 2^i.
  bool tail_bounds_hold() const;
};

// Throws InputError for a zero multiplicity.
DyadicPartition dyadic_partition(const std::vector<std::uint64_t>& multiplicities);

struct ExponentFit {
  std::vector<std::pair<double, double>> samples;
  double slope = 0.0;
  double intercept = 0.0;  // natural log
  double residual = 0.0;   // root mean square in log space
};

// Least squares of log value against log n. Throws InputError with fewer
// than three samples, a nonpositive entry, or a single distinct n.
ExponentFit fit_exponent(std::vector<std::pair<double, double>> samples);

}  // namespace distdist::bounds
