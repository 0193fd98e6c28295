#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "distdist/exact/rational.hpp"

namespace distdist::exact {

// Dense univariate polynomial over the rationals. coeffs()[i] multiplies
// x^i; the leading coefficient is nonzero, and the zero polynomial has no
// coefficients at all.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int degree);
  static UniPoly x() { return monomial(1, 1); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  // Zero for indices past the degree.
  Rational coeff(int i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& at) const;

  UniPoly derivative() const;
  UniPoly monic() const;
  // Scales by 1/|leading| so the sign pattern of the polynomial is kept.
  UniPoly sign_normalized() const;
  UniPoly square_free_part() const;

  std::string to_string(char var = 'x') const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& s, const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
  UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Euclidean division: num = q * den + r with deg r < deg den.
// Throws AlgebraError when den is zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den);

// Quotient of an exact division; throws AlgebraError if a remainder is left.
UniPoly exact_quotient(const UniPoly& num, const UniPoly& den);

// Monic gcd; gcd(0, 0) is 0.
UniPoly gcd(UniPoly a, UniPoly b);

// b^2 - 4ac for a polynomial of degree exactly two.
Rational discriminant(const UniPoly& p);

}  // namespace distdist::exact
