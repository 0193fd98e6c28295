#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "distdist/exact/rational.hpp"
#include "distdist/exact/unipoly.hpp"

namespace distdist::exact {

enum class Var { X = 0, Y = 1 };

inline Var other(Var v) { return v == Var::X ? Var::Y : Var::X; }

// Sparse polynomial in x and y. Keys are exponent pairs (i, j) for x^i y^j;
// zero coefficients are never stored.
class BiPoly {
 public:
  using Exponents = std::pair<unsigned, unsigned>;

  BiPoly() = default;
  static BiPoly constant(const Rational& c);
  static BiPoly x();
  static BiPoly y();
  static BiPoly term(const Rational& c, unsigned xdeg, unsigned ydeg);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  Rational coeff(unsigned i, unsigned j) const;

  int total_degree() const;
  // -1 for the zero polynomial.
  int degree_in(Var v) const;

  Rational operator()(const Rational& x, const Rational& y) const;

  // Writes the polynomial as sum_k c_k(other) * v^k and returns c_0, c_1, ...
  // as polynomials in the remaining variable.
  std::vector<UniPoly> coefficients_in(Var v) const;

  std::string to_string() const;

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const Rational& s, const BiPoly& a);
  friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

 private:
  void add_term(Exponents e, const Rational& c);
  std::map<Exponents, Rational> terms_;
};

// Sylvester resultant of f and g with respect to `eliminate`, as a
// polynomial in the other variable. The determinant is taken by
// fraction-free (Bareiss) elimination over Q[t]. Throws AlgebraError if
// either input is zero or constant in the eliminated variable.
UniPoly resultant(const BiPoly& f, const BiPoly& g, Var eliminate);

// Determinant of a square matrix over Q[t] by Bareiss elimination.
UniPoly bareiss_determinant(std::vector<std::vector<UniPoly>> m);

}  // namespace distdist::exact
