#include "distdist/exact/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <ostream>
#include <utility>

#include "distdist/error.hpp"

namespace distdist::exact {
namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

u128 abs_u128(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

bool fits_small(i128 v) { return v > kMin && v <= kMax; }

mpz_class mpz_from_i128(i128 v) {
  u128 mag = abs_u128(v);
  std::uint64_t parts[2] = {static_cast<std::uint64_t>(mag), static_cast<std::uint64_t>(mag >> 64)};
  mpz_class out;
  mpz_import(out.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, parts);
  if (v < 0) out = -out;
  return out;
}

bool mpz_fits_small(const mpz_class& z) {
  if (!mpz_fits_slong_p(z.get_mpz_t())) return false;
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return mpz_get_si(z.get_mpz_t()) != kMin;
}

std::size_t mix(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return static_cast<std::size_t>(x);
}

std::size_t hash_mpz(const mpz_class& z) {
  std::size_t h = mix(static_cast<std::uint64_t>(mpz_sgn(z.get_mpz_t()) + 2));
  const std::size_t n = mpz_size(z.get_mpz_t());
  for (std::size_t i = 0; i < n; ++i) {
    h = mix(h ^ static_cast<std::uint64_t>(mpz_getlimbn(z.get_mpz_t(), i)));
  }
  return h;
}

bool valid_digits(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(std::int64_t value) {
  if (value == kMin) {
    rep_ = mpq_class(mpz_from_i128(value));
  } else {
    rep_ = Small{value, 1};
  }
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("rational with zero denominator");
  *this = from_i128(num, den);
}

Rational::Rational(const mpq_class& value) { *this = from_mpq(value); }

Rational::Rational(const mpz_class& value) { *this = from_mpq(mpq_class(value)); }

Rational Rational::from_i128(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  u128 g = gcd_u128(abs_u128(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  Rational r;
  if (fits_small(num) && fits_small(den)) {
    r.rep_ = Small{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
  } else {
    mpq_class q(mpz_from_i128(num), mpz_from_i128(den));
    r.rep_ = std::move(q);
  }
  return r;
}

Rational Rational::from_mpq(mpq_class value) {
  value.canonicalize();
  Rational r;
  if (mpz_fits_small(value.get_num()) && mpz_fits_small(value.get_den())) {
    r.rep_ = Small{mpz_get_si(value.get_num_mpz_t()), mpz_get_si(value.get_den_mpz_t())};
  } else {
    r.rep_ = std::move(value);
  }
  return r;
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = slash == std::string_view::npos ? s : trim(s.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
  if (!valid_digits(num, true) || !valid_digits(den, false)) {
    throw InputError("malformed rational: '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InputError("rational with zero denominator: '" + std::string(text) + "'");
  return from_mpq(mpq_class(n, d));
}

std::string Rational::to_string() const {
  if (const auto* s = std::get_if<Small>(&rep_)) {
    if (s->den == 1) return std::to_string(s->num);
    return std::to_string(s->num) + "/" + std::to_string(s->den);
  }
  const auto& q = std::get<mpq_class>(rep_);
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class Rational::to_mpq() const {
  if (const auto* s = std::get_if<Small>(&rep_)) {
    return mpq_class(mpz_from_i128(s->num), mpz_from_i128(s->den));
  }
  return std::get<mpq_class>(rep_);
}

mpz_class Rational::numerator() const {
  if (const auto* s = std::get_if<Small>(&rep_)) return mpz_from_i128(s->num);
  return std::get<mpq_class>(rep_).get_num();
}

mpz_class Rational::denominator() const {
  if (const auto* s = std::get_if<Small>(&rep_)) return mpz_from_i128(s->den);
  return std::get<mpq_class>(rep_).get_den();
}

double Rational::to_double() const {
  if (const auto* s = std::get_if<Small>(&rep_)) {
    return static_cast<double>(s->num) / static_cast<double>(s->den);
  }
  return std::get<mpq_class>(rep_).get_d();
}

int Rational::sign() const {
  if (const auto* s = std::get_if<Small>(&rep_)) return (s->num > 0) - (s->num < 0);
  return sgn(std::get<mpq_class>(rep_));
}

bool Rational::is_integer() const {
  if (const auto* s = std::get_if<Small>(&rep_)) return s->den == 1;
  return std::get<mpq_class>(rep_).get_den() == 1;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw AlgebraError("reciprocal of zero");
  if (const auto* s = std::get_if<Small>(&rep_)) return from_i128(s->den, s->num);
  return from_mpq(1 / std::get<mpq_class>(rep_));
}

std::size_t Rational::hash() const {
  if (const auto* s = std::get_if<Small>(&rep_)) {
    return mix(static_cast<std::uint64_t>(s->num)) ^ (mix(static_cast<std::uint64_t>(s->den)) * 31);
  }
  const auto& q = std::get<mpq_class>(rep_);
  return hash_mpz(q.get_num()) ^ (hash_mpz(q.get_den()) * 31);
}

Rational operator+(const Rational& a, const Rational& b) {
  const auto* x = std::get_if<Rational::Small>(&a.rep_);
  const auto* y = std::get_if<Rational::Small>(&b.rep_);
  if (x && y) {
    if (x->den == 1 && y->den == 1) return Rational::from_i128(i128(x->num) + y->num, 1);
    std::int64_t g = std::gcd(x->den, y->den);
    i128 num = i128(x->num) * (y->den / g) + i128(y->num) * (x->den / g);
    i128 den = i128(x->den) * (y->den / g);
    return Rational::from_i128(num, den);
  }
  return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a) {
  if (const auto* x = std::get_if<Rational::Small>(&a.rep_)) {
    Rational r;
    r.rep_ = Rational::Small{-x->num, x->den};
    return r;
  }
  return Rational::from_mpq(-std::get<mpq_class>(a.rep_));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  const auto* x = std::get_if<Rational::Small>(&a.rep_);
  const auto* y = std::get_if<Rational::Small>(&b.rep_);
  if (x && y) {
    if (x->num == 0 || y->num == 0) return Rational();
    std::int64_t g1 = std::gcd(x->num, y->den);
    std::int64_t g2 = std::gcd(y->num, x->den);
    i128 num = i128(x->num / g1) * (y->num / g2);
    i128 den = i128(x->den / g2) * (y->den / g1);
    return Rational::from_i128(num, den);
  }
  return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw AlgebraError("division by zero");
  return a * b.reciprocal();
}

bool operator==(const Rational& a, const Rational& b) {
  const auto* x = std::get_if<Rational::Small>(&a.rep_);
  const auto* y = std::get_if<Rational::Small>(&b.rep_);
  if (x && y) return x->num == y->num && x->den == y->den;
  if (x || y) return false;
  return std::get<mpq_class>(a.rep_) == std::get<mpq_class>(b.rep_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const auto* x = std::get_if<Rational::Small>(&a.rep_);
  const auto* y = std::get_if<Rational::Small>(&b.rep_);
  if (x && y) {
    i128 lhs = i128(x->num) * y->den;
    i128 rhs = i128(y->num) * x->den;
    return lhs <=> rhs;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace distdist::exact
