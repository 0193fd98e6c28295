#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "distdist/exact/unipoly.hpp"

namespace distdist::exact {

struct WholeLine {};

// Open interval (lo, hi); requires lo < hi.
struct OpenInterval {
  Rational lo;
  Rational hi;
};

using RootRange = std::variant<WholeLine, OpenInterval>;

// Sturm chain p, p', -rem(p, p'), ... with every member scaled by a
// positive constant to keep coefficients small.
std::vector<UniPoly> sturm_sequence(const UniPoly& p);

// Number of sign variations of the chain at a finite point (zeros skipped).
std::size_t sign_variations(const std::vector<UniPoly>& chain, const Rational& at);
// Same at -infinity (negative_side) or +infinity.
std::size_t sign_variations_at_infinity(const std::vector<UniPoly>& chain, bool negative_side);

// Number of distinct real roots of p in the range. The polynomial is made
// square-free first, so repeated roots count once. Throws AlgebraError for
// the zero polynomial.
std::size_t count_real_roots(const UniPoly& p, const RootRange& range = WholeLine{});

}  // namespace distdist::exact
