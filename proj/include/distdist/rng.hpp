#pragma once

#include <cstdint>
#include <random>

#include "distdist/exact/rational.hpp"

namespace distdist {

// Every random draw in the project flows through this wrapper around
// std::mt19937_64, whose output sequence is fixed by the C++ standard.
// Range reduction is done here (rejection sampling on raw 64-bit outputs)
// rather than with std::uniform_int_distribution, whose algorithm is
// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return v % bound;
  }

  // Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // Nonzero-denominator rational num/den with |num| < 2^num_bits and
  // 1 <= den <= 2^den_bits.
  exact::Rational rational(unsigned num_bits, unsigned den_bits, bool allow_negative = true) {
    const std::int64_t span = std::int64_t{1} << num_bits;
    std::int64_t num = allow_negative ? between(-(span - 1), span - 1) : between(0, span - 1);
    std::int64_t den = between(1, std::int64_t{1} << den_bits);
    return exact::Rational(num, den);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace distdist
