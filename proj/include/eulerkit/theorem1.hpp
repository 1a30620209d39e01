#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "eulerkit/binomial.hpp"
#include "eulerkit/identity.hpp"
#include "eulerkit/operators.hpp"
#include "eulerkit/xpoly.hpp"

namespace eulerkit {

namespace detail {

inline void require_depth(const VerifyContext& ctx, const IdentityParams& p) {
  const std::size_t needed = static_cast<std::size_t>(p.n + p.l + 2 * p.r);
  if (needed > ctx.max_index())
    throw std::invalid_argument("theorem1: table depth " + std::to_string(ctx.max_index()) +
                                " insufficient, need " + std::to_string(needed));
}

/// x + c for a scalar c in Q[a].
inline XPoly x_plus(const AlphaPoly& c) { return XPoly::from_coeffs({c, AlphaPoly(Rat(1))}); }

/// c - x for a scalar c in Q[a].
inline XPoly const_minus_x(const AlphaPoly& c) { return XPoly::from_coeffs({c, AlphaPoly(Rat(-1))}); }

}  // namespace detail

/// Left side of the main identity:
///   sum_{k=0}^{n+r} lambda^{n+r-k} C(n+r,k) C(l+k+r,r) E_{l+k}^(a)(x)
///   + (-1)^{l+n+r+s+1} sum_{k=0}^{l+r} lambda^{l+r-k} C(l+r,k) C(n+k+r,r)
///       E_{n+k}^(a)(a - s - lambda - x)
/// The second-sum argument is built by honest composition in Q[a][x].
inline XPoly theorem1_lhs(const IdentityParams& p, VerifyContext& ctx) {
  p.validate();
  detail::require_depth(ctx, p);
  XPoly out;
  const auto lam_hi = lambda_powers(p.lambda, static_cast<std::size_t>(p.n + p.r));
  for (int k = 0; k <= p.n + p.r; ++k) {
    AlphaPoly c = lam_hi[static_cast<std::size_t>(p.n + p.r - k)].scaled(binomial(p.n + p.r, k) *
                                                                         binomial(p.l + k + p.r, p.r));
    out.add_scaled(ctx.base(VerifyContext::Basis::symbolic, static_cast<std::size_t>(p.l + k)), c);
  }
  const XPoly arg =
      detail::const_minus_x(AlphaPoly::alpha() - AlphaPoly(Rat(p.s)) - p.lambda);
  const Rat outer_sign = sign_pow(p.l + p.n + p.r + p.s + 1);
  const auto lam_lo = lambda_powers(p.lambda, static_cast<std::size_t>(p.l + p.r));
  for (int k = 0; k <= p.l + p.r; ++k) {
    AlphaPoly c = lam_lo[static_cast<std::size_t>(p.l + p.r - k)].scaled(
        outer_sign * binomial(p.l + p.r, k) * binomial(p.n + k + p.r, p.r));
    out.add_scaled(
        ctx.composed(VerifyContext::Basis::symbolic, static_cast<std::size_t>(p.n + k), arg), c);
  }
  return out;
}

/// The alternating product polynomial from the telescoping argument:
///   Q_k(x) = (-1)^k (D^r / r!) ((x+k)^{l+r} (x+lambda+k)^{n+r}).
inline XPoly telescope_q(int k, const IdentityParams& p) {
  XPoly a = shifted_x_power(AlphaPoly(Rat(k)), static_cast<std::uint64_t>(p.l + p.r));
  XPoly b = shifted_x_power(p.lambda + AlphaPoly(Rat(k)), static_cast<std::uint64_t>(p.n + p.r));
  XPoly q = scaled_derivative(a * b, static_cast<std::size_t>(p.r));
  return (k % 2 == 0) ? q : -q;
}

/// Right side of the main identity:
///   2 Psi_{a-1}( (D^r / r!) sum_{k=0}^{s-1} (-1)^k (x+k)^{l+r} (x+lambda+k)^{n+r} )
/// which is the empty sum (zero) when s = 0.
inline XPoly theorem1_rhs(const IdentityParams& p, VerifyContext& ctx) {
  p.validate();
  detail::require_depth(ctx, p);
  if (p.s == 0) return XPoly();
  XPoly inner;
  for (int k = 0; k < p.s; ++k) {
    XPoly a = shifted_x_power(AlphaPoly(Rat(k)), static_cast<std::uint64_t>(p.l + p.r));
    XPoly b = shifted_x_power(p.lambda + AlphaPoly(Rat(k)), static_cast<std::uint64_t>(p.n + p.r));
    XPoly prod = a * b;
    inner += (k % 2 == 0) ? prod : -prod;
  }
  return ctx.psi_order_down_one(scaled_derivative(inner, static_cast<std::size_t>(p.r))).scaled(Rat(2));
}

/// The reformulated right side:
///   2 sum_{k=0}^{s-1} sum_{j=0}^{n+r} (-1)^k lambda^{n+r-j} C(n+r,j) C(l+r+j,r)
///       E_{l+j}^(a-1)(x+k)
/// Must agree with theorem1_rhs everywhere; the two are cross-verified.
inline XPoly theorem1_rhs_expanded(const IdentityParams& p, VerifyContext& ctx) {
  p.validate();
  detail::require_depth(ctx, p);
  if (p.s == 0) return XPoly();
  XPoly out;
  const auto lam = lambda_powers(p.lambda, static_cast<std::size_t>(p.n + p.r));
  for (int k = 0; k < p.s; ++k) {
    const XPoly arg = detail::x_plus(AlphaPoly(Rat(k)));
    const Rat ksign = sign_pow(k);
    for (int j = 0; j <= p.n + p.r; ++j) {
      AlphaPoly c = lam[static_cast<std::size_t>(p.n + p.r - j)].scaled(
          ksign * binomial(p.n + p.r, j) * binomial(p.l + p.r + j, p.r));
      out.add_scaled(
          ctx.composed(VerifyContext::Basis::order_down_one, static_cast<std::size_t>(p.l + j), arg), c);
    }
  }
  return out.scaled(Rat(2));
}

/// Internal invariant of the proof of the main identity. Checks, for the
/// given point: Q_k(x+1) = -Q_{k+1}(x) for 0 <= k < s; the telescoped sum
/// Q(x+1) + Q(x) = Q_0(x) - Q_s(x); and that Q_0 and Q_s match their expanded
/// binomial closed forms. Returns the first nonzero difference, or zero.
inline XPoly telescope_residual(const IdentityParams& p, VerifyContext& ctx) {
  p.validate();
  detail::require_depth(ctx, p);
  std::vector<XPoly> q;
  q.reserve(static_cast<std::size_t>(p.s) + 1);
  for (int k = 0; k <= p.s; ++k) q.push_back(telescope_q(k, p));

  const XPoly x_plus_one = detail::x_plus(AlphaPoly(Rat(1)));
  for (int k = 0; k < p.s; ++k) {
    XPoly diff = xpoly_compose(q[static_cast<std::size_t>(k)], x_plus_one) + q[static_cast<std::size_t>(k) + 1];
    if (!diff.is_zero()) return diff;
  }

  XPoly total;
  for (int k = 0; k < p.s; ++k) total += q[static_cast<std::size_t>(k)];
  XPoly folded = xpoly_compose(total, x_plus_one) + total;
  XPoly diff = folded - (q.front() - q.back());
  if (!diff.is_zero()) return diff;

  // Q_0 closed form: sum_k lambda^{n+r-k} C(n+r,k) C(l+k+r,r) x^{l+k}.
  const auto lam_hi = lambda_powers(p.lambda, static_cast<std::size_t>(p.n + p.r));
  XPoly q0_closed;
  for (int k = 0; k <= p.n + p.r; ++k) {
    std::vector<AlphaPoly> mono(static_cast<std::size_t>(p.l + k) + 1);
    mono.back() = lam_hi[static_cast<std::size_t>(p.n + p.r - k)].scaled(binomial(p.n + p.r, k) *
                                                                         binomial(p.l + k + p.r, p.r));
    q0_closed += XPoly::from_coeffs(std::move(mono));
  }
  diff = q.front() - q0_closed;
  if (!diff.is_zero()) return diff;

  // Q_s closed form:
  //   (-1)^{l+n+r+s} sum_k lambda^{l+r-k} C(l+r,k) C(n+k+r,r) (-1)^{n+k} (x+lambda+s)^{n+k}.
  const auto lam_lo = lambda_powers(p.lambda, static_cast<std::size_t>(p.l + p.r));
  const AlphaPoly shift = p.lambda + AlphaPoly(Rat(p.s));
  const Rat outer = sign_pow(p.l + p.n + p.r + p.s);
  XPoly qs_closed;
  for (int k = 0; k <= p.l + p.r; ++k) {
    AlphaPoly c = lam_lo[static_cast<std::size_t>(p.l + p.r - k)].scaled(
        outer * sign_pow(p.n + k) * binomial(p.l + p.r, k) * binomial(p.n + k + p.r, p.r));
    qs_closed.add_scaled(shifted_x_power(shift, static_cast<std::uint64_t>(p.n + k)), c);
  }
  return q.back() - qs_closed;
}

}  // namespace eulerkit
