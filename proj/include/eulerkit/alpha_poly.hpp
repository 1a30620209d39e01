#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eulerkit/binomial.hpp"
#include "eulerkit/rational.hpp"

namespace eulerkit {

/// Polynomial in the formal order symbol alpha over Rat: the ring Q[a].
/// Dense coefficients indexed by power of alpha, trailing zeros trimmed;
/// the zero polynomial has an empty coefficient vector.
class AlphaPoly {
 public:
  AlphaPoly() = default;
  AlphaPoly(Rat c) {
    if (!c.is_zero()) coeffs_.push_back(std::move(c));
  }
  AlphaPoly(std::int64_t c) : AlphaPoly(Rat(c)) {}

  /// The monomial alpha.
  static AlphaPoly alpha() {
    AlphaPoly p;
    p.coeffs_ = {Rat(0), Rat(1)};
    return p;
  }

  static AlphaPoly from_coeffs(std::vector<Rat> coeffs) {
    AlphaPoly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
  }

  /// Degree in alpha; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

  const Rat& coeff(std::size_t k) const {
    static const Rat zero;
    return k < coeffs_.size() ? coeffs_[k] : zero;
  }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  /// The constant term as a rational; throws unless the polynomial is constant.
  const Rat& constant_value() const {
    static const Rat zero;
    if (coeffs_.empty()) return zero;
    if (coeffs_.size() > 1) throw std::domain_error("AlphaPoly: not a constant");
    return coeffs_[0];
  }

  friend AlphaPoly operator-(AlphaPoly p) {
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }

  friend AlphaPoly operator+(const AlphaPoly& a, const AlphaPoly& b) {
    AlphaPoly r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.coeff(i) + b.coeff(i);
    r.trim();
    return r;
  }

  friend AlphaPoly operator-(const AlphaPoly& a, const AlphaPoly& b) {
    AlphaPoly r;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.coeff(i) - b.coeff(i);
    r.trim();
    return r;
  }

  friend AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b) {
    if (a.is_zero() || b.is_zero()) return AlphaPoly();
    if (a.is_constant()) return b.scaled(a.coeffs_[0]);
    if (b.is_constant()) return a.scaled(b.coeffs_[0]);
    AlphaPoly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
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

  AlphaPoly& operator+=(const AlphaPoly& o) { return *this = *this + o; }
  AlphaPoly& operator-=(const AlphaPoly& o) { return *this = *this - o; }
  AlphaPoly& operator*=(const AlphaPoly& o) { return *this = *this * o; }

  AlphaPoly scaled(const Rat& s) const {
    if (s.is_zero()) return AlphaPoly();
    AlphaPoly r = *this;
    for (auto& c : r.coeffs_) c *= s;
    return r;
  }

  static AlphaPoly pow(const AlphaPoly& base, std::uint64_t e) {
    AlphaPoly r(Rat(1));
    AlphaPoly b = base;
    while (e) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  /// Substitutes alpha := alpha + delta (exact Taylor shift).
  AlphaPoly shifted(const Rat& delta) const {
    if (delta.is_zero() || is_constant()) return *this;
    // Horner in (alpha + delta).
    AlphaPoly shift_base;
    shift_base.coeffs_ = {delta, Rat(1)};
    AlphaPoly r(coeffs_.back());
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
      r = r * shift_base;
      r += AlphaPoly(coeffs_[i]);
    }
    return r;
  }

  /// Evaluates at a rational value of alpha.
  Rat eval(const Rat& a) const {
    Rat r;
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * a + coeffs_[i];
    return r;
  }

  bool operator==(const AlphaPoly&) const = default;

  /// Canonical text: descending powers of alpha (printed "a"), rationals as
  /// canonical "p/q". Examples: "1/4*a^2 - 1/4*a", "-a", "3", "0".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const Rat& c = coeffs_[i];
      if (c.is_zero()) continue;
      if (out.empty()) {
        if (c.sign() < 0) out += "-";
      } else {
        out += c.sign() < 0 ? " - " : " + ";
      }
      out += monomial_text(c.abs(), i);
    }
    return out;
  }

 private:
  std::vector<Rat> coeffs_;

  static std::string monomial_text(const Rat& mag, std::size_t power) {
    if (power == 0) return mag.to_string();
    std::string body = power == 1 ? "a" : "a^" + std::to_string(power);
    if (mag.is_one()) return body;
    return mag.to_string() + "*" + body;
  }

  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
};

}  // namespace eulerkit
