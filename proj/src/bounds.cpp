#include "distdist/bounds.hpp"

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>

#include "distdist/error.hpp"

namespace distdist::bounds {
namespace {

constexpr mpfr_prec_t kPrecision = 256;

// RAII holder for one MPFR number.
class Big {
 public:
  Big() { mpfr_init2(v_, kPrecision); }
  ~Big() { mpfr_clear(v_); }
  Big(const Big&) = delete;
  Big& operator=(const Big&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// Encloses (value)^{1/root} for an exact nonnegative integer value.
Interval enclose_root(const mpz_class& value, unsigned long root) {
  Big lo, hi;
  mpfr_set_z(lo.get(), value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi.get(), value.get_mpz_t(), MPFR_RNDU);
  mpfr_rootn_ui(lo.get(), lo.get(), root, MPFR_RNDD);
  mpfr_rootn_ui(hi.get(), hi.get(), root, MPFR_RNDU);
  return {mpfr_get_d(lo.get(), MPFR_RNDD), mpfr_get_d(hi.get(), MPFR_RNDU)};
}

Interval enclose_integer(const mpz_class& value) { return enclose_root(value, 1); }

Interval add(const Interval& a, const Interval& b) {
  Big lo, hi, tmp;
  mpfr_set_d(lo.get(), a.lo, MPFR_RNDD);
  mpfr_set_d(tmp.get(), b.lo, MPFR_RNDD);
  mpfr_add(lo.get(), lo.get(), tmp.get(), MPFR_RNDD);
  mpfr_set_d(hi.get(), a.hi, MPFR_RNDU);
  mpfr_set_d(tmp.get(), b.hi, MPFR_RNDU);
  mpfr_add(hi.get(), hi.get(), tmp.get(), MPFR_RNDU);
  return {mpfr_get_d(lo.get(), MPFR_RNDD), mpfr_get_d(hi.get(), MPFR_RNDU)};
}

mpz_class big(std::uint64_t v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
  return z;
}

void check_range(std::uint64_t m, std::uint64_t n_curves, unsigned k, std::uint64_t t) {
  if (m == 0) throw InputError("envelope needs m >= 1");
  if (n_curves == 0) throw InputError("envelope needs N >= 1");
  if (k < 2) throw InputError("envelope needs k >= 2");
  if (t == 0) throw InputError("envelope needs t >= 1");
}

}  // namespace

std::uint64_t log_coefficient(std::uint64_t t) {
  std::uint64_t c = 0;
  while (c < 64 && (std::uint64_t{1} << c) < t) ++c;
  return std::max<std::uint64_t>(1, c);
}

BoundEnvelope envelope_mult(std::uint64_t m, std::uint64_t n_curves, unsigned k, std::uint64_t t) {
  check_range(m, n_curves, k, t);
  BoundEnvelope e;
  e.m = m;
  e.n_curves = n_curves;
  e.k = k;
  e.t = t;
  // t m^k N^{2k-2} is an exact integer; its (2k-1)-th root is the leading term.
  mpz_class mk, nk;
  mpz_pow_ui(mk.get_mpz_t(), big(m).get_mpz_t(), k);
  mpz_pow_ui(nk.get_mpz_t(), big(n_curves).get_mpz_t(), 2 * k - 2);
  const mpz_class radicand = big(t) * mk * nk;
  e.leading = enclose_root(radicand, 2 * k - 1);
  e.point_term = enclose_integer(big(t) * big(m));
  e.curve_term = enclose_integer(big(log_coefficient(t)) * big(n_curves));
  e.total = add(add(e.leading, e.point_term), e.curve_term);
  return e;
}

BoundEnvelope envelope_ps(std::uint64_t m, std::uint64_t n_curves, unsigned k) {
  return envelope_mult(m, n_curves, k, 1);
}

std::string AffineExponent::to_string() const {
  if (alpha.is_zero()) return constant.to_string();
  std::string s = "(" + alpha.to_string() + ")*alpha";
  if (!constant.is_zero()) s += " + " + constant.to_string();
  return s;
}

AffineExponent leading_exponent_ps(const AffineExponent& em, const AffineExponent& en, unsigned k) {
  return leading_exponent_mult(em, en, AffineExponent{}, k);
}

AffineExponent leading_exponent_mult(const AffineExponent& em, const AffineExponent& en, const AffineExponent& et,
                                     unsigned k) {
  if (k < 2) throw InputError("exponent needs k >= 2");
  const Rational d(2 * static_cast<std::int64_t>(k) - 1);
  const Rational wm(static_cast<std::int64_t>(k));
  const Rational wn(2 * static_cast<std::int64_t>(k) - 2);
  return {(wm * em.constant + wn * en.constant + et.constant) / d, (wm * em.alpha + wn * en.alpha + et.alpha) / d};
}

bool DyadicPartition::conserves() const {
  std::uint64_t sum = 0;
  for (const auto& l : levels) {
    std::uint64_t s = 0;
    for (auto m : l.multiplicities) s += m;
    if (s != l.curves) return false;
    sum += s;
  }
  return sum == total;
}

bool DyadicPartition::tail_bounds_hold() const {
  if (levels.empty()) return true;
  for (unsigned i = 0; i <= levels.back().level; ++i) {
    std::uint64_t classes = 0;
    for (const auto& l : levels) {
      if (l.level >= i) classes += l.multiplicities.size();
    }
    if (mpz_class(big(classes)) * big(std::uint64_t{1} << i) > big(total)) return false;
  }
  return true;
}

DyadicPartition dyadic_partition(const std::vector<std::uint64_t>& multiplicities) {
  DyadicPartition p;
  std::vector<DyadicLevel> by_level(64);
  for (auto m : multiplicities) {
    if (m == 0) throw InputError("dyadic_partition needs multiplicities >= 1");
    unsigned level = 63 - static_cast<unsigned>(__builtin_clzll(m));
    by_level[level].level = level;
    by_level[level].multiplicities.push_back(m);
    by_level[level].curves += m;
    p.total += m;
  }
  for (auto& l : by_level) {
    if (!l.multiplicities.empty()) p.levels.push_back(std::move(l));
  }
  return p;
}

ExponentFit fit_exponent(std::vector<std::pair<double, double>> samples) {
  if (samples.size() < 3) throw InputError("fit_exponent needs at least three samples");
  double sx = 0, sy = 0;
  for (const auto& [n, v] : samples) {
    if (!(n > 0) || !(v > 0)) throw InputError("fit_exponent needs positive samples");
    sx += std::log(n);
    sy += std::log(v);
  }
  const double count = static_cast<double>(samples.size());
  const double mx = sx / count;
  const double my = sy / count;
  double sxx = 0, sxy = 0;
  for (const auto& [n, v] : samples) {
    const double dx = std::log(n) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(v) - my);
  }
  if (sxx == 0) throw InputError("fit_exponent needs at least two distinct n");
  ExponentFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0;
  for (const auto& [n, v] : samples) {
    const double r = std::log(v) - (fit.intercept + fit.slope * std::log(n));
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / count);
  fit.samples = std::move(samples);
  return fit;
}

}  // namespace distdist::bounds
