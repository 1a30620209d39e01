#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "eulerkit/alpha_poly.hpp"
#include "eulerkit/binomial.hpp"
#include "eulerkit/rational.hpp"

namespace eulerkit {

/// Polynomial in x with AlphaPoly coefficients: the ambient ring Q[a][x]
/// where every identity is checked. Same normalization rules as AlphaPoly.
class XPoly {
 public:
  XPoly() = default;
  XPoly(AlphaPoly c) {
    if (!c.is_zero()) coeffs_.push_back(std::move(c));
  }
  XPoly(Rat c) : XPoly(AlphaPoly(std::move(c))) {}
  XPoly(std::int64_t c) : XPoly(AlphaPoly(c)) {}

  /// The monomial x.
  static XPoly x() {
    XPoly p;
    p.coeffs_ = {AlphaPoly(), AlphaPoly(Rat(1))};
    return p;
  }

  /// The constant alpha, as an element of Q[a][x].
  static XPoly alpha() { return XPoly(AlphaPoly::alpha()); }

  static XPoly from_coeffs(std::vector<AlphaPoly> coeffs) {
    XPoly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
  }

  /// Degree in x; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  const AlphaPoly& coeff(std::size_t k) const {
    static const AlphaPoly zero;
    return k < coeffs_.size() ? coeffs_[k] : zero;
  }
  const std::vector<AlphaPoly>& coeffs() const { return coeffs_; }

  /// Largest alpha-degree over all coefficients; -1 for the zero polynomial.
  int max_alpha_degree() const {
    int d = -1;
    for (const auto& c : coeffs_) d = std::max(d, c.degree());
    return d;
  }

  friend XPoly operator-(XPoly p) {
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }

  friend XPoly operator+(const XPoly& a, const XPoly& b) {
    XPoly r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.coeff(i) + b.coeff(i);
    r.trim();
    return r;
  }

  friend XPoly operator-(const XPoly& a, const XPoly& b) {
    XPoly r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.coeff(i) - b.coeff(i);
    r.trim();
    return r;
  }

  friend XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) return XPoly();
    XPoly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, AlphaPoly());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    r.trim();
    return r;
  }

  XPoly& operator+=(const XPoly& o) { return *this = *this + o; }
  XPoly& operator-=(const XPoly& o) { return *this = *this - o; }
  XPoly& operator*=(const XPoly& o) { return *this = *this * o; }

  XPoly scaled(const AlphaPoly& s) const {
    if (s.is_zero()) return XPoly();
    XPoly r = *this;
    for (auto& c : r.coeffs_) c *= s;
    return r;
  }
  XPoly scaled(const Rat& s) const {
    if (s.is_zero()) return XPoly();
    XPoly r = *this;
    for (auto& c : r.coeffs_) c = c.scaled(s);
    return r;
  }

  /// Adds s * p to this polynomial in place; the accumulation primitive used
  /// by the identity builders.
  void add_scaled(const XPoly& p, const AlphaPoly& s) {
    if (p.is_zero() || s.is_zero()) return;
    if (coeffs_.size() < p.coeffs_.size()) coeffs_.resize(p.coeffs_.size());
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      if (!p.coeffs_[i].is_zero()) coeffs_[i] += p.coeffs_[i] * s;
    }
    trim();
  }

  static XPoly pow(const XPoly& base, std::uint64_t e) {
    XPoly r(Rat(1));
    XPoly b = base;
    while (e) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  bool operator==(const XPoly&) const = default;

  /// Canonical text: descending powers of x, each coefficient in descending
  /// powers of alpha (printed "a"), composite coefficients parenthesized.
  /// Example: "x^2 - a*x + (1/4*a^2 - 1/4*a)".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const AlphaPoly& c = coeffs_[k];
      if (c.is_zero()) continue;
      if (monomial_term_count(c) > 1) {
        // Composite coefficient: keep the whole group in parentheses.
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")";
        if (k > 0) out += "*" + x_text(k);
        continue;
      }
      int d = c.degree();
      const Rat& m = c.coeff(static_cast<std::size_t>(d));
      if (out.empty()) {
        if (m.sign() < 0) out += "-";
      } else {
        out += m.sign() < 0 ? " - " : " + ";
      }
      out += term_text(m.abs(), static_cast<std::size_t>(d), k);
    }
    return out;
  }

 private:
  std::vector<AlphaPoly> coeffs_;

  static std::size_t monomial_term_count(const AlphaPoly& c) {
    std::size_t n = 0;
    for (const auto& r : c.coeffs())
      if (!r.is_zero()) ++n;
    return n;
  }

  static std::string x_text(std::size_t k) { return k == 1 ? "x" : "x^" + std::to_string(k); }

  static std::string term_text(const Rat& mag, std::size_t alpha_pow, std::size_t x_pow) {
    std::string parts;
    bool have_symbol = alpha_pow > 0 || x_pow > 0;
    if (!mag.is_one() || !have_symbol) parts = mag.to_string();
    if (alpha_pow > 0) {
      if (!parts.empty()) parts += "*";
      parts += alpha_pow == 1 ? "a" : "a^" + std::to_string(alpha_pow);
    }
    if (x_pow > 0) {
      if (!parts.empty()) parts += "*";
      parts += x_text(x_pow);
    }
    return parts;
  }

  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
};

/// Exact product in Q[a][x].
inline XPoly xpoly_mul(const XPoly& a, const XPoly& b) { return a * b; }

/// Substitution x := q(x), computed by Horner evaluation in Q[a][x].
inline XPoly xpoly_compose(const XPoly& p, const XPoly& q) {
  if (p.is_zero()) return XPoly();
  XPoly r(p.coeff(static_cast<std::size_t>(p.degree())));
  for (std::size_t k = static_cast<std::size_t>(p.degree()); k-- > 0;) {
    r = r * q;
    r += XPoly(p.coeff(k));
  }
  return r;
}

/// Classical derivation operator: D(x^n) = n x^(n-1), Q[a]-linear.
inline XPoly xpoly_derivative(const XPoly& p) {
  if (p.degree() < 1) return XPoly();
  std::vector<AlphaPoly> out(static_cast<std::size_t>(p.degree()));
  for (std::size_t k = 1; k <= static_cast<std::size_t>(p.degree()); ++k)
    out[k - 1] = p.coeff(k).scaled(Rat(static_cast<std::int64_t>(k)));
  return XPoly::from_coeffs(std::move(out));
}

/// Order shift: every coefficient c(a) becomes c(a + delta).
inline XPoly alpha_shift(const XPoly& p, const Rat& delta) {
  if (delta.is_zero()) return p;
  std::vector<AlphaPoly> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.shifted(delta));
  return XPoly::from_coeffs(std::move(out));
}

/// Substitutes a rational value for alpha in every coefficient.
inline XPoly alpha_eval(const XPoly& p, const Rat& a) {
  std::vector<AlphaPoly> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.emplace_back(c.eval(a));
  return XPoly::from_coeffs(std::move(out));
}

/// Evaluates at x := v for an AlphaPoly argument (Horner in Q[a]).
inline AlphaPoly xpoly_eval(const XPoly& p, const AlphaPoly& v) {
  AlphaPoly r;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) r = r * v + p.coeff(k);
  return r;
}

/// Expansion of (x + c)^n without going through repeated multiplication.
inline XPoly shifted_x_power(const AlphaPoly& c, std::uint64_t n) {
  std::vector<AlphaPoly> out(static_cast<std::size_t>(n) + 1);
  AlphaPoly cpow(Rat(1));
  for (std::size_t j = 0; j <= n; ++j) {
    // Coefficient of x^(n-j) is C(n, j) c^j.
    out[static_cast<std::size_t>(n) - j] =
        cpow.scaled(binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(j)));
    if (j < n) cpow *= c;
  }
  return XPoly::from_coeffs(std::move(out));
}

}  // namespace eulerkit
