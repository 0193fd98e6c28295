#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace distdist::exact {

// Exact rational number in lowest terms with a positive denominator.
//
// Values whose numerator and denominator fit in a signed 64-bit word are
// kept inline and combined with 128-bit intermediates; anything larger
// moves to a GMP rational. The representation is canonical: a value that
// fits inline is never stored as a GMP rational, so equality and hashing
// can dispatch on the representation alone.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(int value) : Rational(static_cast<std::int64_t>(value)) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& value);
  explicit Rational(const mpz_class& value);

  // Accepts "k", "-k", "num/den" (any sign placement on the numerator, any
  // common factor). Throws InputError on malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  // Canonical "num/den", or "k" when the denominator is 1.
  std::string to_string() const;

  mpq_class to_mpq() const;
  mpz_class numerator() const;
  mpz_class denominator() const;
  double to_double() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;
  bool is_small() const { return std::holds_alternative<Small>(rep_); }

  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational square() const { return *this * *this; }
  Rational reciprocal() const;

  std::size_t hash() const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  struct Small {
    std::int64_t num = 0;
    std::int64_t den = 1;
  };

  static Rational from_i128(__int128 num, __int128 den);
  static Rational from_mpq(mpq_class value);

  std::variant<Small, mpq_class> rep_{Small{}};
};

struct RationalHash {
  std::size_t operator()(const Rational& r) const noexcept { return r.hash(); }
};

}  // namespace distdist::exact

template <>
struct std::hash<distdist::exact::Rational> {
  std::size_t operator()(const distdist::exact::Rational& r) const noexcept { return r.hash(); }
};
