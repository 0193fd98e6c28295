#include "distdist/exact/bipoly.hpp"

#include <algorithm>
#include <sstream>

#include "distdist/error.hpp"

namespace distdist::exact {

BiPoly BiPoly::constant(const Rational& c) { return term(c, 0, 0); }
BiPoly BiPoly::x() { return term(1, 1, 0); }
BiPoly BiPoly::y() { return term(1, 0, 1); }

BiPoly BiPoly::term(const Rational& c, unsigned xdeg, unsigned ydeg) {
  BiPoly p;
  p.add_term({xdeg, ydeg}, c);
  return p;
}

void BiPoly::add_term(Exponents e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational BiPoly::coeff(unsigned i, unsigned j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational() : it->second;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.first + e.second));
  return d;
}

int BiPoly::degree_in(Var v) const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    d = std::max(d, static_cast<int>(v == Var::X ? e.first : e.second));
  }
  return d;
}

Rational BiPoly::operator()(const Rational& x, const Rational& y) const {
  Rational acc;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (unsigned i = 0; i < e.first; ++i) t *= x;
    for (unsigned j = 0; j < e.second; ++j) t *= y;
    acc += t;
  }
  return acc;
}

std::vector<UniPoly> BiPoly::coefficients_in(Var v) const {
  const int d = degree_in(v);
  if (d < 0) return {};
  std::vector<std::vector<Rational>> dense(static_cast<std::size_t>(d) + 1);
  for (const auto& [e, c] : terms_) {
    unsigned k = v == Var::X ? e.first : e.second;
    unsigned r = v == Var::X ? e.second : e.first;
    auto& row = dense[k];
    if (row.size() <= r) row.resize(r + 1);
    row[r] += c;
  }
  std::vector<UniPoly> out;
  out.reserve(dense.size());
  for (auto& row : dense) out.emplace_back(std::move(row));
  return out;
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    Rational mag = c.abs();
    bool unit = mag == Rational(1);
    if (!unit || (e.first == 0 && e.second == 0)) os << mag;
    if (e.first > 0) os << (unit ? "" : "*") << "x" << (e.first > 1 ? "^" + std::to_string(e.first) : "");
    if (e.second > 0) {
      os << ((unit && e.first == 0) ? "" : "*") << "y" << (e.second > 1 ? "^" + std::to_string(e.second) : "");
    }
    first = false;
  }
  return os.str();
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

BiPoly operator-(const BiPoly& a) {
  BiPoly out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  }
  return out;
}

BiPoly operator*(const Rational& s, const BiPoly& a) {
  BiPoly out;
  if (s.is_zero()) return out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, s * c);
  return out;
}

UniPoly bareiss_determinant(std::vector<std::vector<UniPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return UniPoly::constant(1);
  for (const auto& row : m) {
    if (row.size() != n) throw AlgebraError("determinant of a non-square matrix");
  }
  bool negate = false;
  UniPoly prev = UniPoly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return {};
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_quotient(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = UniPoly();
    }
    prev = m[k][k];
  }
  UniPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

UniPoly resultant(const BiPoly& f, const BiPoly& g, Var eliminate) {
  if (f.is_zero() || g.is_zero()) throw AlgebraError("resultant of a zero polynomial");
  const int m = f.degree_in(eliminate);
  const int n = g.degree_in(eliminate);
  if (m <= 0 || n <= 0) {
    throw AlgebraError("resultant input is constant in the eliminated variable");
  }
  const auto fc = f.coefficients_in(eliminate);
  const auto gc = g.coefficients_in(eliminate);
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<UniPoly>> syl(size, std::vector<UniPoly>(size));
  // Rows 0..n-1 hold shifted copies of f, rows n..n+m-1 shifted copies of g,
  // both with the leading coefficient first.
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k <= m; ++k) syl[r][static_cast<std::size_t>(r + m - k)] = fc[static_cast<std::size_t>(k)];
  }
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k <= n; ++k) {
      syl[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + n - k)] = gc[static_cast<std::size_t>(k)];
    }
  }
  return bareiss_determinant(std::move(syl));
}

}  // namespace distdist::exact
