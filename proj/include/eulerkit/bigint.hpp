#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eulerkit {

/// Arbitrary-precision signed integer.
///
/// Sign-magnitude representation with 32-bit limbs (little-endian, no
/// trailing zero limbs). Zero is the empty limb vector with a positive sign,
/// so default equality compares canonical forms.
class BigInt {
 public:
  BigInt() = default;

  BigInt(std::int64_t v) {
    if (v == 0) return;
    negative_ = v < 0;
    // Avoid overflow on INT64_MIN by widening through uint64.
    std::uint64_t mag = negative_ ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    limbs_.push_back(static_cast<std::uint32_t>(mag));
    if (mag >> 32) limbs_.push_back(static_cast<std::uint32_t>(mag >> 32));
  }

  static BigInt from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigInt: empty string");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: no digits in string");
    BigInt out;
    // Consume 9-digit chunks: out = out * 10^9 + chunk.
    std::uint32_t chunk = 0;
    int chunk_len = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("BigInt: invalid digit '" + std::string(1, s[i]) + "'");
      chunk = chunk * 10 + static_cast<std::uint32_t>(s[i] - '0');
      if (++chunk_len == 9) {
        out.mul_add_small(1000000000u, chunk);
        chunk = 0;
        chunk_len = 0;
      }
    }
    if (chunk_len > 0) {
      std::uint32_t scale = 1;
      for (int k = 0; k < chunk_len; ++k) scale *= 10;
      out.mul_add_small(scale, chunk);
    }
    if (!out.is_zero()) out.negative_ = neg;
    return out;
  }

  bool is_zero() const { return limbs_.empty(); }
  bool is_negative() const { return negative_; }
  bool is_one() const { return !negative_ && limbs_.size() == 1 && limbs_[0] == 1; }
  bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1u); }
  int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

  BigInt abs() const {
    BigInt r = *this;
    r.negative_ = false;
    return r;
  }

  BigInt& negate() {
    if (!is_zero()) negative_ = !negative_;
    return *this;
  }

  friend BigInt operator-(BigInt a) {
    a.negate();
    return a;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.negative_ == b.negative_) {
      BigInt r;
      r.limbs_ = add_mag(a.limbs_, b.limbs_);
      r.negative_ = a.negative_ && !r.limbs_.empty();
      return r;
    }
    int c = cmp_mag(a.limbs_, b.limbs_);
    if (c == 0) return BigInt();
    BigInt r;
    if (c > 0) {
      r.limbs_ = sub_mag(a.limbs_, b.limbs_);
      r.negative_ = a.negative_;
    } else {
      r.limbs_ = sub_mag(b.limbs_, a.limbs_);
      r.negative_ = b.negative_;
    }
    return r;
  }

  friend BigInt operator-(const BigInt& a, const BigInt& b) {
    BigInt nb = b;
    nb.negate();
    return a + nb;
  }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    BigInt r;
    r.limbs_ = mul_mag(a.limbs_, b.limbs_);
    r.negative_ = a.negative_ != b.negative_;
    return r;
  }

  /// Truncating division: quotient rounds toward zero, remainder takes the
  /// sign of the dividend. Throws std::domain_error on division by zero.
  static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    if (cmp_mag(a.limbs_, b.limbs_) < 0) return {BigInt(), a};
    auto [qm, rm] = divmod_mag(a.limbs_, b.limbs_);
    BigInt q, r;
    q.limbs_ = std::move(qm);
    r.limbs_ = std::move(rm);
    q.negative_ = !q.limbs_.empty() && (a.negative_ != b.negative_);
    r.negative_ = !r.limbs_.empty() && a.negative_;
    return {std::move(q), std::move(r)};
  }

  friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
  friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
  BigInt& operator/=(const BigInt& o) { return *this = *this / o; }

  bool operator==(const BigInt&) const = default;

  std::strong_ordering operator<=>(const BigInt& o) const {
    if (negative_ != o.negative_) return negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = cmp_mag(limbs_, o.limbs_);
    if (negative_) c = -c;
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  /// Greatest common divisor of the magnitudes; gcd(0, 0) = 0.
  static BigInt gcd(BigInt a, BigInt b) {
    a.negative_ = false;
    b.negative_ = false;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Binary GCD: strip common factors of two, then subtract-and-shift.
    unsigned za = a.trailing_zero_bits();
    unsigned zb = b.trailing_zero_bits();
    unsigned shift = std::min(za, zb);
    a.shr_bits(za);
    b.shr_bits(zb);
    while (true) {
      int c = cmp_mag(a.limbs_, b.limbs_);
      if (c == 0) break;
      if (c < 0) std::swap(a, b);
      a.limbs_ = sub_mag(a.limbs_, b.limbs_);
      a.shr_bits(a.trailing_zero_bits());
    }
    a.shl_bits(shift);
    return a;
  }

  static BigInt pow(BigInt base, std::uint64_t e) {
    BigInt r(1);
    while (e) {
      if (e & 1) r *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return r;
  }

  std::optional<std::int64_t> to_int64() const {
    if (limbs_.size() > 2) return std::nullopt;
    std::uint64_t mag = 0;
    if (!limbs_.empty()) mag = limbs_[0];
    if (limbs_.size() == 2) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (negative_) {
      if (mag > static_cast<std::uint64_t>(INT64_MAX) + 1) return std::nullopt;
      return static_cast<std::int64_t>(~mag + 1);
    }
    if (mag > static_cast<std::uint64_t>(INT64_MAX)) return std::nullopt;
    return static_cast<std::int64_t>(mag);
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    // Peel 9 decimal digits at a time by short division.
    std::vector<std::uint32_t> mag = limbs_;
    std::string digits;
    while (!mag.empty()) {
      std::uint64_t rem = 0;
      for (std::size_t i = mag.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | mag[i];
        mag[i] = static_cast<std::uint32_t>(cur / 1000000000u);
        rem = cur % 1000000000u;
      }
      while (!mag.empty() && mag.back() == 0) mag.pop_back();
      for (int k = 0; k < 9; ++k) {
        digits.push_back(static_cast<char>('0' + rem % 10));
        rem /= 10;
      }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (negative_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
  }

  std::size_t limb_count() const { return limbs_.size(); }

 private:
  using Limbs = std::vector<std::uint32_t>;

  bool negative_ = false;
  Limbs limbs_;

  static void trim(Limbs& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  }

  // *this = *this * m + c on the magnitude (sign untouched); used by parsing.
  void mul_add_small(std::uint32_t m, std::uint32_t c) {
    std::uint64_t carry = c;
    for (auto& limb : limbs_) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
      limb = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    while (carry) {
      limbs_.push_back(static_cast<std::uint32_t>(carry));
      carry >>= 32;
    }
  }

  static int cmp_mag(const Limbs& a, const Limbs& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  static Limbs add_mag(const Limbs& a, const Limbs& b) {
    const Limbs& lo = a.size() >= b.size() ? a : b;
    const Limbs& hi = a.size() >= b.size() ? b : a;
    Limbs r;
    r.reserve(lo.size() + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      std::uint64_t cur = carry + lo[i] + (i < hi.size() ? hi[i] : 0);
      r.push_back(static_cast<std::uint32_t>(cur));
      carry = cur >> 32;
    }
    if (carry) r.push_back(static_cast<std::uint32_t>(carry));
    return r;
  }

  // Requires |a| >= |b|.
  static Limbs sub_mag(const Limbs& a, const Limbs& b) {
    Limbs r;
    r.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
      if (cur < 0) {
        cur += (std::int64_t{1} << 32);
        borrow = 1;
      } else {
        borrow = 0;
      }
      r.push_back(static_cast<std::uint32_t>(cur));
    }
    trim(r);
    return r;
  }

  static Limbs mul_mag(const Limbs& a, const Limbs& b) {
    Limbs r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::uint64_t carry = 0;
      std::uint64_t ai = a[i];
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::uint64_t cur = static_cast<std::uint64_t>(r[i + j]) + ai * b[j] + carry;
        r[i + j] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
      }
      r[i + b.size()] = static_cast<std::uint32_t>(carry);
    }
    trim(r);
    return r;
  }

  // Magnitude division, |a| >= |b| > 0. Knuth algorithm D with a short-division
  // fast path for single-limb divisors.
  static std::pair<Limbs, Limbs> divmod_mag(const Limbs& a, const Limbs& b) {
    if (b.size() == 1) {
      Limbs q(a.size(), 0);
      std::uint64_t rem = 0;
      std::uint64_t d = b[0];
      for (std::size_t i = a.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | a[i];
        q[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
      }
      trim(q);
      Limbs r;
      if (rem) r.push_back(static_cast<std::uint32_t>(rem));
      return {std::move(q), std::move(r)};
    }

    const std::size_t n = b.size();
    const std::size_t m = a.size() - n;
    const unsigned s = std::countl_zero(b.back());

    // Normalized copies: top limb of vn has its high bit set.
    Limbs vn(n);
    for (std::size_t i = n; i-- > 1;)
      vn[i] = (b[i] << s) | (s ? static_cast<std::uint32_t>(static_cast<std::uint64_t>(b[i - 1]) >> (32 - s)) : 0);
    vn[0] = b[0] << s;

    Limbs un(a.size() + 1);
    un[a.size()] = s ? static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.back()) >> (32 - s)) : 0;
    for (std::size_t i = a.size(); i-- > 1;)
      un[i] = (a[i] << s) | (s ? static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[i - 1]) >> (32 - s)) : 0);
    un[0] = a[0] << s;

    Limbs q(m + 1, 0);
    const std::uint64_t base = std::uint64_t{1} << 32;
    for (std::size_t j = m + 1; j-- > 0;) {
      std::uint64_t numer = (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
      std::uint64_t qhat = numer / vn[n - 1];
      std::uint64_t rhat = numer % vn[n - 1];
      while (qhat >= base || qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
        --qhat;
        rhat += vn[n - 1];
        if (rhat >= base) break;
      }
      // Multiply-subtract qhat * vn from un[j .. j+n].
      std::int64_t borrow = 0;
      std::uint64_t carry = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t prod = qhat * vn[i] + carry;
        carry = prod >> 32;
        std::int64_t diff = static_cast<std::int64_t>(un[i + j]) - borrow - static_cast<std::int64_t>(prod & 0xffffffffu);
        if (diff < 0) {
          diff += static_cast<std::int64_t>(base);
          borrow = 1;
        } else {
          borrow = 0;
        }
        un[i + j] = static_cast<std::uint32_t>(diff);
      }
      std::int64_t diff = static_cast<std::int64_t>(un[j + n]) - borrow - static_cast<std::int64_t>(carry);
      if (diff < 0) {
        // qhat was one too large: add the divisor back once.
        diff += static_cast<std::int64_t>(base);
        --qhat;
        std::uint64_t c2 = 0;
        for (std::size_t i = 0; i < n; ++i) {
          std::uint64_t cur = static_cast<std::uint64_t>(un[i + j]) + vn[i] + c2;
          un[i + j] = static_cast<std::uint32_t>(cur);
          c2 = cur >> 32;
        }
        diff += static_cast<std::int64_t>(c2);
        diff &= static_cast<std::int64_t>(base - 1);
      }
      un[j + n] = static_cast<std::uint32_t>(diff);
      q[j] = static_cast<std::uint32_t>(qhat);
    }

    Limbs r(n);
    for (std::size_t i = 0; i < n; ++i)
      r[i] = (un[i] >> s) | (s && i + 1 < un.size() ? static_cast<std::uint32_t>(static_cast<std::uint64_t>(un[i + 1]) << (32 - s)) : 0);
    trim(q);
    trim(r);
    return {std::move(q), std::move(r)};
  }

  unsigned trailing_zero_bits() const {
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      if (limbs_[i]) return static_cast<unsigned>(i) * 32 + static_cast<unsigned>(std::countr_zero(limbs_[i]));
    }
    return 0;
  }

  void shr_bits(unsigned bits) {
    if (is_zero() || bits == 0) return;
    const unsigned limb_shift = bits / 32;
    const unsigned bit_shift = bits % 32;
    if (limb_shift >= limbs_.size()) {
      limbs_.clear();
      negative_ = false;
      return;
    }
    limbs_.erase(limbs_.begin(), limbs_.begin() + limb_shift);
    if (bit_shift) {
      for (std::size_t i = 0; i + 1 < limbs_.size(); ++i)
        limbs_[i] = (limbs_[i] >> bit_shift) | (limbs_[i + 1] << (32 - bit_shift));
      limbs_.back() >>= bit_shift;
    }
    trim(limbs_);
    if (limbs_.empty()) negative_ = false;
  }

  void shl_bits(unsigned bits) {
    if (is_zero() || bits == 0) return;
    const unsigned limb_shift = bits / 32;
    const unsigned bit_shift = bits % 32;
    if (bit_shift) {
      limbs_.push_back(0);
      for (std::size_t i = limbs_.size(); i-- > 1;)
        limbs_[i] = (limbs_[i] << bit_shift) | static_cast<std::uint32_t>(static_cast<std::uint64_t>(limbs_[i - 1]) >> (32 - bit_shift));
      limbs_[0] <<= bit_shift;
    }
    limbs_.insert(limbs_.begin(), limb_shift, 0);
    trim(limbs_);
  }
};

}  // namespace eulerkit
