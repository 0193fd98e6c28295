#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "distdist/distance.hpp"

namespace distdist {

// Ordered quadruples (a, p, b, q) with a, b in P1, p, q in P2,
// |ap| = |bq| and (a, p) != (b, q). q1 counts the degenerate slice (equal
// |y| for a line, equal norm for a circle), q2 the rest.
struct QuadrupleStats {
  std::uint64_t q_total = 0;
  std::uint64_t q1 = 0;
  std::uint64_t q2 = 0;
  // (sum_i (|E_i| - 1))^2 / D
  Rational cauchy_schwarz_lower;
  std::vector<std::uint64_t> class_sizes;

  std::size_t distance_count() const { return class_sizes.size(); }
  // q_total * D >= (sum_i (|E_i| - 1))^2, checked in exact integers.
  bool cauchy_schwarz_holds() const;
};

// sum_i |E_i| (|E_i| - 1) = 2 sum_i C(|E_i|, 2).
std::uint64_t ordered_quadruple_count(const std::vector<std::uint64_t>& class_sizes);

Rational cauchy_schwarz_lower_bound(const std::vector<std::uint64_t>& class_sizes);

// Maps a point of P2 to the value that defines the degenerate slice.
using SliceKey = std::function<Rational(const ExactPoint&)>;

// Counts degenerate quadruples without enumerating them: P2 is grouped by
// slice key and each group contributes sum c (c - 1) over its own
// distance classes with P1.
std::uint64_t count_slice_quadruples(const PointSet& p1, const PointSet& p2, const SliceKey& key);

// q_total from the class sizes, q1 from count_slice_quadruples, q2 = q_total - q1.
QuadrupleStats quadruple_stats(const analysis::DistanceClassPartition& partition, const SliceKey& key);

// Walks every ordered pair of distinct members inside each distance class,
// re-verifies |ap| = |bq| and classifies each quadruple. Cost is
// sum_i |E_i|^2; callers apply the size guard.
QuadrupleStats enumerate_quadruple_stats(const analysis::DistanceClassPartition& partition, const SliceKey& key);

struct ChoiceWitness {
  ExactPoint a, b, p;
};

struct ChoiceBoundReport {
  std::size_t bound = 0;
  std::size_t max_completions = 0;
  std::optional<ChoiceWitness> witness;
  std::uint64_t triples = 0;
  std::uint64_t violations = 0;

  bool ok() const { return violations == 0; }
};

// Refuse enumeration when |P1| * |P2| exceeds this, unless forced.
inline constexpr std::uint64_t kEnumerationGuard = 100000;

}  // namespace distdist
