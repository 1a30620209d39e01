#pragma once

#include <cstdint>
#include <stdexcept>

#include "eulerkit/bigint.hpp"
#include "eulerkit/rational.hpp"

namespace eulerkit {

/// C(n, k) as an exact integer; 0 when k < 0 or k > n.
inline BigInt binomial_int(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be non-negative");
  if (k < 0 || k > n) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt c(1);
  for (std::int64_t i = 1; i <= k; ++i) {
    // Exact at every step: c holds C(n-k+i-1, i-1) * (n-k+i) before dividing.
    c = c * BigInt(n - k + i) / BigInt(i);
  }
  return c;
}

inline Rat binomial(std::int64_t n, std::int64_t k) { return Rat(binomial_int(n, k)); }

/// n! as an exact integer.
inline BigInt factorial(std::uint64_t n) {
  BigInt f(1);
  for (std::uint64_t i = 2; i <= n; ++i) f *= BigInt(static_cast<std::int64_t>(i));
  return f;
}

/// 2^e as an exact rational; e may be negative.
inline Rat pow2(std::int64_t e) { return Rat::pow(Rat(2), e); }

/// (-1)^e as an exact rational.
inline Rat sign_pow(std::int64_t e) { return (e % 2 == 0) ? Rat(1) : Rat(-1); }

}  // namespace eulerkit
