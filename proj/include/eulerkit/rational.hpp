#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "eulerkit/bigint.hpp"

namespace eulerkit {

/// Exact rational number, always in canonical form: the denominator is
/// positive and coprime to the numerator, zero is 0/1.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(std::int64_t n) : num_(n), den_(1) {}
  Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }
  Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
  explicit Rat(BigInt n) : num_(std::move(n)), den_(1) {}

  /// Parses "p" or "p/q" (optional leading '-'); reduces to canonical form.
  static Rat from_string(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(BigInt::from_string(s), BigInt(1));
    return Rat(BigInt::from_string(s.substr(0, slash)), BigInt::from_string(s.substr(slash + 1)));
  }

  /// Parses only canonical text: reduced, positive denominator, no "+",
  /// no leading zeros, integers written without "/1". Returns nullopt on
  /// any deviation. Used by the strict cache-file reader.
  static std::optional<Rat> parse_canonical(std::string_view s) {
    if (s.empty()) return std::nullopt;
    Rat value;
    try {
      value = from_string(s);
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
    if (value.to_string() != s) return std::nullopt;
    return value;
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_integer() const { return den_.is_one(); }
  int sign() const { return num_.sign(); }

  friend Rat operator-(Rat a) {
    a.num_.negate();
    return a;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return Rat(a.num_ + b.num_, a.den_);
    return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }

  friend Rat operator-(const Rat& a, const Rat& b) {
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return Rat(a.num_ - b.num_, a.den_);
    return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }

  friend Rat operator*(const Rat& a, const Rat& b) {
    if (a.is_zero() || b.is_zero()) return Rat();
    // Cross-reduce first so the final product is already canonical.
    BigInt g1 = BigInt::gcd(a.num_, b.den_);
    BigInt g2 = BigInt::gcd(b.num_, a.den_);
    Rat r;
    r.num_ = (g1.is_one() ? a.num_ : a.num_ / g1) * (g2.is_one() ? b.num_ : b.num_ / g2);
    r.den_ = (g2.is_one() ? a.den_ : a.den_ / g2) * (g1.is_one() ? b.den_ : b.den_ / g1);
    return r;
  }

  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("Rat: division by zero");
    Rat inv;
    inv.num_ = b.den_;
    inv.den_ = b.num_;
    if (inv.den_.is_negative()) {
      inv.den_.negate();
      inv.num_.negate();
    }
    return a * inv;
  }

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  bool operator==(const Rat&) const = default;

  std::strong_ordering operator<=>(const Rat& o) const { return num_ * o.den_ <=> o.num_ * den_; }

  Rat abs() const {
    Rat r = *this;
    if (r.num_.is_negative()) r.num_.negate();
    return r;
  }

  /// Integer power; exponent may be negative for nonzero values.
  static Rat pow(const Rat& base, std::int64_t e) {
    if (e == 0) return Rat(1);
    if (e < 0) return Rat(1) / pow(base, -e);
    Rat r;
    r.num_ = BigInt::pow(base.num_, static_cast<std::uint64_t>(e));
    r.den_ = BigInt::pow(base.den_, static_cast<std::uint64_t>(e));
    return r;
  }

  /// Canonical text: "p" when the value is an integer, else "p/q".
  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
  }

 private:
  BigInt num_;
  BigInt den_;

  void normalize() {
    if (den_.is_zero()) throw std::domain_error("Rat: zero denominator");
    if (num_.is_zero()) {
      den_ = BigInt(1);
      return;
    }
    if (den_.is_negative()) {
      den_.negate();
      num_.negate();
    }
    if (den_.is_one()) return;
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
      num_ /= g;
      den_ /= g;
    }
  }
};

}  // namespace eulerkit
