#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eulerkit/alpha_poly.hpp"
#include "eulerkit/binomial.hpp"
#include "eulerkit/rational.hpp"
#include "eulerkit/trunc_series.hpp"
#include "eulerkit/xpoly.hpp"

namespace eulerkit {

/// Table of the constant terms e_k(a) = E_k^(a)(0) of the generalized Euler
/// polynomials, for k = 0..max_index. Immutable after construction; every
/// polynomial and number in the engine derives from it.
class EulerTable {
 public:
  /// Builds e_0..e_N from the generating function route: e_n(a) is n! times
  /// the t^n coefficient of exp(-a log((e^t + 1)/2)).
  static EulerTable build(std::size_t max_index) {
    const std::size_t order = max_index;
    // (e^t + 1)/2 = 1 + sum_{k>=1} t^k / (2 k!), constant term 1.
    TruncSeries half_sum(order);
    half_sum.set_coeff(0, AlphaPoly(Rat(1)));
    BigInt kfact(1);
    for (std::size_t k = 1; k <= order; ++k) {
      kfact *= BigInt(static_cast<std::int64_t>(k));
      half_sum.set_coeff(k, AlphaPoly(Rat(BigInt(1), BigInt(2) * kfact)));
    }
    TruncSeries log_half = series_log(half_sum);
    // Scale by -a: each rational coefficient c becomes the monomial -c a.
    TruncSeries exponent(order);
    for (std::size_t k = 1; k <= order; ++k) {
      const Rat& c = log_half.coeff(k).coeff(0);
      if (!c.is_zero()) exponent.set_coeff(k, AlphaPoly::from_coeffs({Rat(0), -c}));
    }
    TruncSeries egf = series_exp(exponent);
    std::vector<AlphaPoly> terms(max_index + 1);
    BigInt nfact(1);
    for (std::size_t n = 0; n <= max_index; ++n) {
      if (n > 0) nfact *= BigInt(static_cast<std::int64_t>(n));
      terms[n] = egf.coeff(n).scaled(Rat(nfact));
    }
    return EulerTable(std::move(terms));
  }

  /// Wraps externally supplied constant terms (the cache loader's entry
  /// point). Only structural checks are applied here.
  static EulerTable from_constant_terms(std::vector<AlphaPoly> terms) {
    if (terms.empty()) throw std::invalid_argument("EulerTable: need at least e_0");
    return EulerTable(std::move(terms));
  }

  std::size_t max_index() const { return terms_.size() - 1; }

  const AlphaPoly& constant_term(std::size_t k) const {
    if (k >= terms_.size()) throw std::invalid_argument("EulerTable: index exceeds table depth");
    return terms_[k];
  }

  const std::vector<AlphaPoly>& constant_terms() const { return terms_; }

  bool operator==(const EulerTable&) const = default;

 private:
  explicit EulerTable(std::vector<AlphaPoly> terms) : terms_(std::move(terms)) {}

  std::vector<AlphaPoly> terms_;
};

/// E_n^(a)(x) = sum_k C(n,k) e_k(a) x^(n-k); monic of degree n in x.
inline XPoly euler_poly(std::size_t n, const EulerTable& table) {
  if (n > table.max_index()) throw std::invalid_argument("euler_poly: index exceeds table depth");
  std::vector<AlphaPoly> coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    coeffs[n - k] =
        table.constant_term(k).scaled(binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)));
  }
  return XPoly::from_coeffs(std::move(coeffs));
}

/// Classical Genocchi polynomial G_n(x) = n E_{n-1}(x) at order a = 1.
/// Indexed from n >= 1; the n = 0 value is undefined.
inline XPoly genocchi_poly(std::size_t n, const EulerTable& table) {
  if (n == 0) throw std::domain_error("genocchi_poly: Genocchi polynomials are indexed from n = 1");
  if (n - 1 > table.max_index()) throw std::invalid_argument("genocchi_poly: index exceeds table depth");
  return alpha_eval(euler_poly(n - 1, table), Rat(1)).scaled(Rat(static_cast<std::int64_t>(n)));
}

enum class SequenceKind { euler_number, genocchi_number };

/// Exact integer sequences: Euler numbers E_n = 2^n E_n(1/2) for n = 0..count-1,
/// or Genocchi numbers G_n = G_n(0) for n = 1..count. Integrality of every
/// value is a checked postcondition.
inline std::vector<Rat> sequence_values(SequenceKind kind, std::size_t count, const EulerTable& table) {
  if (count == 0) throw std::invalid_argument("sequence_values: count must be positive");
  std::vector<Rat> out;
  out.reserve(count);
  if (kind == SequenceKind::euler_number) {
    if (count - 1 > table.max_index())
      throw std::invalid_argument("sequence_values: table depth insufficient for Euler numbers");
    for (std::size_t n = 0; n < count; ++n) {
      XPoly classical = alpha_eval(euler_poly(n, table), Rat(1));
      Rat value = pow2(static_cast<std::int64_t>(n)) * xpoly_eval(classical, AlphaPoly(Rat(1, 2))).constant_value();
      out.push_back(std::move(value));
    }
  } else {
    if (count - 1 > table.max_index())
      throw std::invalid_argument("sequence_values: table depth insufficient for Genocchi numbers");
    for (std::size_t n = 1; n <= count; ++n) {
      Rat value = table.constant_term(n - 1).eval(Rat(1)) * Rat(static_cast<std::int64_t>(n));
      out.push_back(std::move(value));
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!out[i].is_integer())
      throw std::logic_error("sequence_values: non-integer value at position " + std::to_string(i));
  }
  return out;
}

}  // namespace eulerkit
