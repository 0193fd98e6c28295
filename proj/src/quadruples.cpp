#include "distdist/quadruples.hpp"

#include <unordered_map>

#include "distdist/error.hpp"

namespace distdist {

std::uint64_t ordered_quadruple_count(const std::vector<std::uint64_t>& class_sizes) {
  std::uint64_t total = 0;
  for (auto s : class_sizes) total += s * (s - 1);
  return total;
}

Rational cauchy_schwarz_lower_bound(const std::vector<std::uint64_t>& class_sizes) {
  if (class_sizes.empty()) return Rational();
  mpz_class sum = 0;
  for (auto s : class_sizes) sum += static_cast<unsigned long>(s - 1);
  return Rational(mpq_class(sum * sum, static_cast<unsigned long>(class_sizes.size())));
}

bool QuadrupleStats::cauchy_schwarz_holds() const {
  mpz_class sum = 0;
  for (auto s : class_sizes) sum += static_cast<unsigned long>(s - 1);
  mpz_class lhs = mpz_class(static_cast<unsigned long>(q_total)) * static_cast<unsigned long>(class_sizes.size());
  return lhs >= sum * sum;
}

std::uint64_t count_slice_quadruples(const PointSet& p1, const PointSet& p2, const SliceKey& key) {
  std::unordered_map<Rational, std::vector<std::size_t>> slices;
  std::vector<Rational> order;
  for (std::size_t j = 0; j < p2.size(); ++j) {
    Rational k = key(p2[j]);
    auto [it, inserted] = slices.try_emplace(k);
    if (inserted) order.push_back(k);
    it->second.push_back(j);
  }
  std::uint64_t total = 0;
  std::unordered_map<Rational, std::uint64_t> counts;
  for (const auto& k : order) {
    counts.clear();
    for (const auto& a : p1) {
      for (std::size_t j : slices[k]) ++counts[squared_distance(a, p2[j])];
    }
    for (const auto& [d, c] : counts) total += c * (c - 1);
  }
  return total;
}

QuadrupleStats quadruple_stats(const analysis::DistanceClassPartition& partition, const SliceKey& key) {
  QuadrupleStats s;
  s.class_sizes = partition.class_sizes();
  s.q_total = ordered_quadruple_count(s.class_sizes);
  s.q1 = count_slice_quadruples(partition.p1, partition.p2, key);
  if (s.q1 > s.q_total) {
    throw InvariantViolation("degenerate quadruple count exceeds the total");
  }
  s.q2 = s.q_total - s.q1;
  s.cauchy_schwarz_lower = cauchy_schwarz_lower_bound(s.class_sizes);
  return s;
}

QuadrupleStats enumerate_quadruple_stats(const analysis::DistanceClassPartition& partition, const SliceKey& key) {
  QuadrupleStats s;
  s.class_sizes = partition.class_sizes();
  std::vector<Rational> slice(partition.p2.size());
  for (std::size_t j = 0; j < partition.p2.size(); ++j) slice[j] = key(partition.p2[j]);
  for (const auto& cls : partition.classes) {
    for (const auto& [ai, pi] : cls.pairs) {
      for (const auto& [bi, qi] : cls.pairs) {
        if (ai == bi && pi == qi) continue;
        if (squared_distance(partition.p1[ai], partition.p2[pi]) != squared_distance(partition.p1[bi], partition.p2[qi])) {
          throw InvariantViolation("distance class holds pairs at different distances");
        }
        ++s.q_total;
        if (slice[pi] == slice[qi]) ++s.q1;
        else ++s.q2;
      }
    }
  }
  s.cauchy_schwarz_lower = cauchy_schwarz_lower_bound(s.class_sizes);
  return s;
}

}  // namespace distdist
