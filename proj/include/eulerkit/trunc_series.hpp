#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eulerkit/alpha_poly.hpp"
#include "eulerkit/rational.hpp"

namespace eulerkit {

/// Truncated power series in t with AlphaPoly coefficients, fixed order N.
/// All arithmetic discards terms of degree > N.
class TruncSeries {
 public:
  explicit TruncSeries(std::size_t order) : coeffs_(order + 1) {}

  static TruncSeries one(std::size_t order) {
    TruncSeries s(order);
    s.coeffs_[0] = AlphaPoly(Rat(1));
    return s;
  }

  static TruncSeries from_coeffs(std::vector<AlphaPoly> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("TruncSeries: need at least the constant term");
    TruncSeries s(coeffs.size() - 1);
    s.coeffs_ = std::move(coeffs);
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const AlphaPoly& coeff(std::size_t k) const { return coeffs_.at(k); }
  void set_coeff(std::size_t k, AlphaPoly c) { coeffs_.at(k) = std::move(c); }

  TruncSeries scaled(const AlphaPoly& s) const {
    TruncSeries r(order());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] = coeffs_[k] * s;
    return r;
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    require_same_order(a, b);
    TruncSeries r(a.order());
    for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return r;
  }

  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    require_same_order(a, b);
    TruncSeries r(a.order());
    for (std::size_t k = 0; k < r.coeffs_.size(); ++k) r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return r;
  }

  bool operator==(const TruncSeries&) const = default;

 private:
  std::vector<AlphaPoly> coeffs_;

  static void require_same_order(const TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("TruncSeries: order mismatch");
  }

  friend TruncSeries series_mul(const TruncSeries&, const TruncSeries&);
  friend TruncSeries series_log(const TruncSeries&);
  friend TruncSeries series_exp(const TruncSeries&);
};

/// Cauchy product truncated at the common order.
inline TruncSeries series_mul(const TruncSeries& f, const TruncSeries& g) {
  if (f.order() != g.order()) throw std::invalid_argument("series_mul: order mismatch");
  TruncSeries r(f.order());
  for (std::size_t i = 0; i <= f.order(); ++i) {
    if (f.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= g.order(); ++j) {
      if (g.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
  }
  return r;
}

/// log f for f with constant term 1, via the recurrence f g' = f'.
/// Every division is by a positive integer, so coefficients stay in Q[a].
inline TruncSeries series_log(const TruncSeries& f) {
  if (!f.coeffs_[0].is_one()) throw std::domain_error("series_log: constant term must be 1");
  const std::size_t order = f.order();
  TruncSeries g(order);
  for (std::size_t n = 1; n <= order; ++n) {
    // n g_n = n f_n - sum_{j=1}^{n-1} (n - j) g_{n-j} f_j
    AlphaPoly acc = f.coeffs_[n].scaled(Rat(static_cast<std::int64_t>(n)));
    for (std::size_t j = 1; j < n; ++j)
      acc -= g.coeffs_[n - j].scaled(Rat(static_cast<std::int64_t>(n - j))) * f.coeffs_[j];
    g.coeffs_[n] = acc.scaled(Rat(1, static_cast<std::int64_t>(n)));
  }
  return g;
}

/// exp g for g with constant term 0, via the recurrence f' = g' f.
inline TruncSeries series_exp(const TruncSeries& g) {
  if (!g.coeffs_[0].is_zero()) throw std::domain_error("series_exp: constant term must be 0");
  const std::size_t order = g.order();
  TruncSeries f(order);
  f.coeffs_[0] = AlphaPoly(Rat(1));
  for (std::size_t n = 1; n <= order; ++n) {
    // n f_n = sum_{k=1}^{n} k g_k f_{n-k}
    AlphaPoly acc;
    for (std::size_t k = 1; k <= n; ++k) {
      if (g.coeffs_[k].is_zero()) continue;
      acc += g.coeffs_[k].scaled(Rat(static_cast<std::int64_t>(k))) * f.coeffs_[n - k];
    }
    f.coeffs_[n] = acc.scaled(Rat(1, static_cast<std::int64_t>(n)));
  }
  return f;
}

}  // namespace eulerkit
