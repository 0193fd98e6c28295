#include "distdist/exact/unipoly.hpp"

#include <algorithm>
#include <sstream>

#include "distdist/error.hpp"

namespace distdist::exact {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational();
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) throw AlgebraError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational UniPoly::operator()(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    d[i - 1] = coeffs_[i] * Rational(static_cast<std::int64_t>(i));
  }
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return leading().reciprocal() * *this;
}

UniPoly UniPoly::sign_normalized() const {
  if (is_zero()) return {};
  return leading().abs().reciprocal() * *this;
}

UniPoly UniPoly::square_free_part() const {
  if (is_zero()) throw AlgebraError("square-free part of the zero polynomial");
  if (degree() <= 0) return *this;
  return exact_quotient(*this, gcd(*this, derivative()));
}

std::string UniPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    Rational mag = c.abs();
    if (i == 0 || mag != Rational(1)) os << mag;
    if (i > 0) os << var;
    if (i > 1) os << '^' << i;
    first = false;
  }
  return os.str();
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.coeffs_.size()) out[i] += a.coeffs_[i];
    if (i < b.coeffs_.size()) out[i] += b.coeffs_[i];
  }
  return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a) {
  std::vector<Rational> out(a.coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -a.coeffs_[i];
  return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly operator*(const Rational& s, const UniPoly& a) {
  if (s.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = s * a.coeffs_[i];
  return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw AlgebraError("polynomial division by zero");
  if (num.degree() < den.degree()) return {UniPoly(), num};
  std::vector<Rational> rem = num.coeffs();
  std::vector<Rational> quot(static_cast<std::size_t>(num.degree() - den.degree()) + 1);
  const Rational inv_lead = den.leading().reciprocal();
  const int dd = den.degree();
  for (int k = num.degree() - dd; k >= 0; --k) {
    Rational c = rem[static_cast<std::size_t>(k + dd)] * inv_lead;
    quot[static_cast<std::size_t>(k)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= c * den.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly exact_quotient(const UniPoly& num, const UniPoly& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw AlgebraError("inexact polynomial division");
  return q;
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

Rational discriminant(const UniPoly& p) {
  if (p.degree() != 2) {
    throw AlgebraError("discriminant expects degree 2, got degree " + std::to_string(p.degree()));
  }
  const Rational& c = p.coeffs()[0];
  const Rational& b = p.coeffs()[1];
  const Rational& a = p.coeffs()[2];
  return b * b - Rational(4) * a * c;
}

}  // namespace distdist::exact
