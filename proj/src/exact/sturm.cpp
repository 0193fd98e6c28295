#include "distdist/exact/sturm.hpp"

#include "distdist/error.hpp"

namespace distdist::exact {
namespace {

std::size_t variations(const std::vector<int>& signs) {
  std::size_t count = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

}  // namespace

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  if (p.is_zero()) throw AlgebraError("Sturm sequence of the zero polynomial");
  std::vector<UniPoly> chain{p.sign_normalized()};
  UniPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d.sign_normalized());
  while (true) {
    UniPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back((-r).sign_normalized());
  }
  return chain;
}

std::size_t sign_variations(const std::vector<UniPoly>& chain, const Rational& at) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(q(at).sign());
  return variations(signs);
}

std::size_t sign_variations_at_infinity(const std::vector<UniPoly>& chain, bool negative_side) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) {
    int s = q.leading().sign();
    if (negative_side && q.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

std::size_t count_real_roots(const UniPoly& p, const RootRange& range) {
  if (p.is_zero()) throw AlgebraError("count_real_roots on the zero polynomial");
  const UniPoly sf = p.square_free_part();
  if (sf.degree() <= 0) return 0;
  const auto chain = sturm_sequence(sf);
  if (std::holds_alternative<WholeLine>(range)) {
    return sign_variations_at_infinity(chain, true) - sign_variations_at_infinity(chain, false);
  }
  const auto& iv = std::get<OpenInterval>(range);
  if (!(iv.lo < iv.hi)) throw AlgebraError("open interval needs lo < hi");
  // For square-free p, V(lo) - V(hi) counts the roots in (lo, hi].
  std::size_t n = sign_variations(chain, iv.lo) - sign_variations(chain, iv.hi);
  if (sf(iv.hi).is_zero()) --n;
  return n;
}

}  // namespace distdist::exact
