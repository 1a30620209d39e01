#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eulerkit/binomial.hpp"
#include "eulerkit/identity.hpp"
#include "eulerkit/theorem1.hpp"

namespace eulerkit {

namespace detail {

inline XPoly x_monomial(std::size_t n) {
  std::vector<AlphaPoly> c(n + 1);
  c[n] = AlphaPoly(Rat(1));
  return XPoly::from_coeffs(std::move(c));
}

inline XPoly minus_x() { return XPoly::from_coeffs({AlphaPoly(), AlphaPoly(Rat(-1))}); }

inline XPoly alpha_minus_x() { return XPoly::from_coeffs({AlphaPoly::alpha(), AlphaPoly(Rat(-1))}); }

}  // namespace detail

/// Reason the identity does not apply at this parameter point, if any.
/// Constraint violations are usage errors, never FAILS.
inline std::optional<std::string> applicability_issue(IdentityId id, const IdentityParams& p) {
  switch (id) {
    case IdentityId::cor3:
    case IdentityId::cor5:
      if (p.r % 2 != 0) return "requires even r";
      return std::nullopt;
    case IdentityId::cor0_r6:
    case IdentityId::hu_kim: {
      const int k = p.extra_at("k");
      const int q = p.extra_at("q");
      const int m = p.extra_at("m");
      if (id == IdentityId::hu_kim && k % 2 == 0) return "requires odd k";
      if (m + q < k || p.n + q < k) return "requires k <= m+q and k <= n+q";
      return std::nullopt;
    }
    case IdentityId::cor6:
      if (p.n < 1 || p.l < 1) return "requires n >= 1 and l >= 1 (Genocchi indices start at 1)";
      return std::nullopt;
    case IdentityId::eq_r5:
      if (!p.lambda.is_constant()) return "requires a rational scalar slot (classical identity)";
      return std::nullopt;
    case IdentityId::prop_deriv:
      if (p.n < 1) return "requires n >= 1";
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

/// Largest table index the identity touches at this point.
inline std::size_t required_table_depth(IdentityId id, const IdentityParams& p) {
  const auto z = [](int v) { return static_cast<std::size_t>(v < 0 ? 0 : v); };
  switch (id) {
    case IdentityId::thm1:
    case IdentityId::thm1_eq14:
    case IdentityId::qk_telescope:
    case IdentityId::cor1_r4:
      return z(p.n + p.l + 2 * p.r);
    case IdentityId::eq_r2:
    case IdentityId::eq_r5:
      return z(p.n + p.l);
    case IdentityId::eq_r24:
    case IdentityId::eq_r3:
      return z(p.n + p.l + 1);
    case IdentityId::cor0_r6:
    case IdentityId::hu_kim:
      return z(p.extra_at("m") + p.n + 2 * p.extra_at("q"));
    case IdentityId::cor2:
    case IdentityId::cor4:
      return z(p.n + p.l + p.r);
    case IdentityId::cor3:
    case IdentityId::cor5:
      return z(2 * p.n + p.r);
    case IdentityId::cor6:
      return z(p.n + p.l);
    default:
      return z(p.n);
  }
}

namespace detail {

// --- Classical two-index families (order fixed at a = 1) -------------------

inline XPoly residual_eq_r2(const IdentityParams& p, VerifyContext& ctx) {
  using B = VerifyContext::Basis;
  XPoly out;
  for (int k = 0; k <= p.n; ++k)
    out.add_scaled(ctx.base(B::classical, static_cast<std::size_t>(p.l + k)),
                   AlphaPoly(sign_pow(p.n) * binomial(p.n, k)));
  const XPoly neg = minus_x();
  for (int k = 0; k <= p.l; ++k)
    out.add_scaled(ctx.composed(B::classical, static_cast<std::size_t>(p.n + k), neg),
                   AlphaPoly(-sign_pow(p.l) * binomial(p.l, k)));
  return out;
}

inline XPoly eq_r24_style_lhs(const IdentityParams& p, VerifyContext& ctx, int first_hi, int second_hi) {
  using B = VerifyContext::Basis;
  XPoly out;
  for (int k = 0; k <= first_hi; ++k)
    out.add_scaled(ctx.base(B::classical, static_cast<std::size_t>(p.l + k)),
                   AlphaPoly(sign_pow(p.n) * binomial(p.n + 1, k) * Rat(p.l + k + 1)));
  const XPoly neg = minus_x();
  for (int k = 0; k <= second_hi; ++k)
    out.add_scaled(ctx.composed(B::classical, static_cast<std::size_t>(p.n + k), neg),
                   AlphaPoly(sign_pow(p.l) * binomial(p.l + 1, k) * Rat(p.n + k + 1)));
  return out;
}

inline XPoly residual_eq_r24(const IdentityParams& p, VerifyContext& ctx) {
  return eq_r24_style_lhs(p, ctx, p.n + 1, p.l + 1);
}

/// The structural factor of the reformulated identity: E_{n+l+1}(y) - y^{n+l+1}.
inline XPoly eq_r3_structural_factor(const IdentityParams& p, VerifyContext& ctx) {
  const std::size_t m = static_cast<std::size_t>(p.n + p.l + 1);
  return ctx.base(VerifyContext::Basis::classical, m) - x_monomial(m);
}

/// Corrected reformulation: the constant is 2(n+l+2), not the printed
/// 2(n+l+3). See probes.hpp for the diagnostic that pins this down.
inline XPoly residual_eq_r3(const IdentityParams& p, VerifyContext& ctx) {
  XPoly lhs = eq_r24_style_lhs(p, ctx, p.n, p.l);
  Rat c = sign_pow(p.n + 1) * Rat(2 * (p.n + p.l + 2));
  return lhs - eq_r3_structural_factor(p, ctx).scaled(c);
}

inline XPoly residual_eq_r5(const IdentityParams& p, VerifyContext& ctx) {
  using B = VerifyContext::Basis;
  const Rat lam = p.lambda.constant_value();
  XPoly out;
  for (int k = 0; k <= p.n; ++k)
    out.add_scaled(ctx.base(B::classical, static_cast<std::size_t>(p.l + k)),
                   AlphaPoly(sign_pow(p.n) * Rat::pow(lam, p.n - k) * binomial(p.n, k)));
  const XPoly arg = const_minus_x(AlphaPoly(Rat(1) - lam));
  for (int k = 0; k <= p.l; ++k)
    out.add_scaled(ctx.composed(B::classical, static_cast<std::size_t>(p.n + k), arg),
                   AlphaPoly(-sign_pow(p.l) * Rat::pow(lam, p.l - k) * binomial(p.l, k)));
  return out;
}

// --- Corollary 1 (s = 0 face of the main identity) --------------------------

inline XPoly residual_cor1_r4(const IdentityParams& p, VerifyContext& ctx) {
  using B = VerifyContext::Basis;
  XPoly out;
  const auto lam_hi = lambda_powers(p.lambda, static_cast<std::size_t>(p.n + p.r));
  for (int k = 0; k <= p.n + p.r; ++k)
    out.add_scaled(ctx.base(B::symbolic, static_cast<std::size_t>(p.l + k)),
                   lam_hi[static_cast<std::size_t>(p.n + p.r - k)].scaled(binomial(p.n + p.r, k) *
                                                                          binomial(p.l + k + p.r, p.r)));
  const XPoly arg = const_minus_x(AlphaPoly::alpha() - p.lambda);
  const Rat outer = sign_pow(p.l + p.n + p.r);
  const auto lam_lo = lambda_powers(p.lambda, static_cast<std::size_t>(p.l + p.r));
  for (int k = 0; k <= p.l + p.r; ++k)
    out.add_scaled(ctx.composed(B::symbolic, static_cast<std::size_t>(p.n + k), arg),
                   lam_lo[static_cast<std::size_t>(p.l + p.r - k)].scaled(
                       -outer * binomial(p.l + p.r, k) * binomial(p.n + k + p.r, p.r)));
  return out;
}

// --- The (k, q, m, n) family and its classical specialization ---------------

inline XPoly residual_cor0_r6(const IdentityParams& p, VerifyContext& ctx) {
  using B = VerifyContext::Basis;
  const int k = p.extra_at("k");
  const int q = p.extra_at("q");
  const int m = p.extra_at("m");
  const int n = p.n;
  XPoly out;
  const auto apow = lambda_powers(AlphaPoly::alpha(), static_cast<std::size_t>(std::max(m, n) + q));
  for (int i = 0; i <= m + q; ++i) {
    Rat b = binomial(m + q, i) * binomial(n + q + i, k);
    if (b.is_zero()) continue;
    out.add_scaled(ctx.base(B::symbolic, static_cast<std::size_t>(n + q + i - k)),
                   apow[static_cast<std::size_t>(m + q - i)].scaled(sign_pow(m) * b));
  }
  const XPoly neg = minus_x();
  for (int j = 0; j <= n + q; ++j) {
    Rat b = binomial(n + q, j) * binomial(m + q + j, k);
    if (b.is_zero()) continue;
    out.add_scaled(ctx.composed(B::symbolic, static_cast<std::size_t>(m + q + j - k), neg),
                   apow[static_cast<std::size_t>(n + q - j)].scaled(sign_pow(n + k + 1) * b));
  }
  return out;
}

inline XPoly residual_hu_kim(const IdentityParams& p, VerifyContext& ctx) {
  using B = VerifyContext::Basis;
  const int k = p.extra_at("k");
  const int q = p.extra_at("q");
  const int m = p.extra_at("m");
  const int n = p.n;
  XPoly out;
  for (int i = 0; i <= m + q; ++i) {
    Rat b = binomial(m + q, i) * binomial(n + q + i, k);
    if (b.is_zero()) continue;
    out.add_scaled(ctx.base(B::classical, static_cast<std::size_t>(n + q + i - k)),
                   AlphaPoly(sign_pow(m) * b));
  }
  const XPoly neg = minus_x();
  for (int j = 0; j <= n + q; ++j) {
    Rat b = binomial(n + q, j) * binomial(m + q + j, k);
    if (b.is_zero()) continue;
    out.add_scaled(ctx.composed(B::classical, static_cast<std::size_t>(m + q + j - k), neg),
                   AlphaPoly(sign_pow(n) * b));
  }
  return out;
}

// --- Euler / Genocchi number identities -------------------------------------

inline Rat cor2_style_rhs(const IdentityParams& p) {
  Rat acc;
  for (int j = 0; j <= p.r; ++j)
    acc += sign_pow(j) * binomial(p.n + p.r, j) * binomial(p.l + p.r, p.r - j);
  return acc;
}

inline XPoly residual_cor2(const IdentityParams& p, VerifyContext& ctx) {
  Rat acc;
  for (int k = 0; k <= p.n + p.r; ++k)
    acc += sign_pow(p.l) * binomial(p.n + p.r, k) * binomial(p.l + k + p.r, p.r) *
           pow2(p.n + p.r - 1 - k) * ctx.euler_number(static_cast<std::size_t>(p.l + k));
  for (int k = 0; k <= p.l + p.r; ++k)
    acc += sign_pow(p.n + p.r) * binomial(p.l + p.r, k) * binomial(p.n + k + p.r, p.r) *
           pow2(p.l + p.r - 1 - k) * ctx.euler_number(static_cast<std::size_t>(p.n + k));
  acc -= cor2_style_rhs(p);
  return XPoly(AlphaPoly(acc));
}

inline XPoly residual_cor3(const IdentityParams& p, VerifyContext& ctx) {
  Rat acc;
  for (int k = 0; k <= p.n + p.r; ++k)
    acc += binomial(p.n + p.r, k) * binomial(p.n + p.r + k, p.r) * pow2(p.n + p.r - k) *
           ctx.euler_number(static_cast<std::size_t>(p.n + k));
  acc -= sign_pow(p.n + p.r / 2) * binomial(p.n + p.r, p.r / 2);
  return XPoly(AlphaPoly(acc));
}

inline XPoly residual_cor4(const IdentityParams& p, VerifyContext& ctx) {
  Rat acc;
  for (int k = 0; k <= p.n + p.r; ++k)
    acc += sign_pow(p.l) * binomial(p.n + p.r, k) * binomial(p.l + k + p.r, p.r - 1) *
           pow2(p.n + p.r - 1 - k) * ctx.genocchi_number(static_cast<std::size_t>(p.l + k + 1));
  for (int k = 0; k <= p.l + p.r; ++k)
    acc += sign_pow(p.n + p.r) * binomial(p.l + p.r, k) * binomial(p.n + k + p.r, p.r - 1) *
           pow2(p.l + p.r - 1 - k) * ctx.genocchi_number(static_cast<std::size_t>(p.n + k + 1));
  acc -= Rat(p.r) * cor2_style_rhs(p);
  return XPoly(AlphaPoly(acc));
}

inline XPoly residual_cor5(const IdentityParams& p, VerifyContext& ctx) {
  Rat acc;
  for (int k = 0; k <= p.n + p.r; ++k)
    acc += binomial(p.n + p.r, k) * binomial(p.n + p.r + k, p.r - 1) * pow2(p.n + p.r - k) *
           ctx.genocchi_number(static_cast<std::size_t>(p.n + k + 1));
  acc -= Rat(p.r) * sign_pow(p.n + p.r / 2) * binomial(p.n + p.r, p.r / 2);
  return XPoly(AlphaPoly(acc));
}

inline XPoly residual_cor6(const IdentityParams& p, VerifyContext& ctx) {
  using B = VerifyContext::Basis;
  XPoly out;
  for (int k = 0; k <= p.n; ++k)
    out.add_scaled(ctx.genocchi(static_cast<std::size_t>(p.l + k)), AlphaPoly(binomial(p.n, k)));
  const XPoly neg = minus_x();
  for (int k = 0; k <= p.l; ++k) {
    // G_m(-x) = m E_{m-1}(-x): reuse the memoized classical composition.
    const std::size_t m = static_cast<std::size_t>(p.n + k);
    out.add_scaled(ctx.composed(B::classical, m - 1, neg),
                   AlphaPoly(sign_pow(p.l + p.n) * binomial(p.l, k) * Rat(static_cast<std::int64_t>(m))));
  }
  return out;
}

// --- Appell properties and lemmas -------------------------------------------

inline XPoly residual_prop_e0(VerifyContext& ctx) {
  return ctx.base(VerifyContext::Basis::symbolic, 0) - XPoly(Rat(1));
}

inline XPoly residual_prop_deriv(const IdentityParams& p, VerifyContext& ctx) {
  using B = VerifyContext::Basis;
  return xpoly_derivative(ctx.base(B::symbolic, static_cast<std::size_t>(p.n))) -
         ctx.base(B::symbolic, static_cast<std::size_t>(p.n - 1)).scaled(Rat(p.n));
}

inline XPoly residual_prop_addition(const IdentityParams& p, VerifyContext& ctx) {
  using B = VerifyContext::Basis;
  const std::size_t n = static_cast<std::size_t>(p.n);
  XPoly rhs;
  const auto ypow = lambda_powers(p.lambda, n);
  for (std::size_t k = 0; k <= n; ++k)
    rhs.add_scaled(ctx.base(B::symbolic, k),
                   ypow[n - k].scaled(binomial(p.n, static_cast<std::int64_t>(k))));
  return ctx.composed(B::symbolic, n, x_plus(p.lambda)) - rhs;
}

inline XPoly residual_prop_lambda(const IdentityParams& p, VerifyContext& ctx) {
  using B = VerifyContext::Basis;
  return lambda_apply(ctx.base(B::symbolic, static_cast<std::size_t>(p.n))) -
         ctx.base(B::order_down_one, static_cast<std::size_t>(p.n)).scaled(Rat(2));
}

inline XPoly residual_prop_reflect(const IdentityParams& p, VerifyContext& ctx) {
  using B = VerifyContext::Basis;
  const std::size_t n = static_cast<std::size_t>(p.n);
  return ctx.composed(B::symbolic, n, alpha_minus_x()) - ctx.base(B::symbolic, n).scaled(sign_pow(p.n));
}

inline XPoly residual_lemma1(const IdentityParams& p, VerifyContext& ctx) {
  using B = VerifyContext::Basis;
  const std::size_t n = static_cast<std::size_t>(p.n);
  XPoly via_psi = psi_apply(shifted_x_power(p.lambda, n), Rat(0), ctx.table());
  return via_psi - ctx.composed(B::symbolic, n, x_plus(p.lambda));
}

inline XPoly residual_lemma2_r7(const IdentityParams& p, VerifyContext& ctx) {
  const XPoly mono = x_monomial(static_cast<std::size_t>(p.n));
  return xpoly_derivative(psi_apply(mono, Rat(0), ctx.table())) -
         psi_apply(xpoly_derivative(mono), Rat(0), ctx.table());
}

inline XPoly residual_lemma2_r8(const IdentityParams& p, VerifyContext& ctx) {
  const XPoly mono = x_monomial(static_cast<std::size_t>(p.n));
  return psi_apply(lambda_apply(mono), Rat(0), ctx.table()) -
         psi_apply(mono, Rat(-1), ctx.table()).scaled(Rat(2));
}

inline XPoly build_residual(IdentityId id, const IdentityParams& p, VerifyContext& ctx) {
  switch (id) {
    case IdentityId::thm1:
      return theorem1_lhs(p, ctx) - theorem1_rhs(p, ctx);
    case IdentityId::thm1_eq14:
      return theorem1_rhs_expanded(p, ctx) - theorem1_rhs(p, ctx);
    case IdentityId::qk_telescope:
      return telescope_residual(p, ctx);
    case IdentityId::cor1_r4:
      return residual_cor1_r4(p, ctx);
    case IdentityId::eq_r2:
      return residual_eq_r2(p, ctx);
    case IdentityId::eq_r24:
      return residual_eq_r24(p, ctx);
    case IdentityId::eq_r3:
      return residual_eq_r3(p, ctx);
    case IdentityId::eq_r5:
      return residual_eq_r5(p, ctx);
    case IdentityId::cor0_r6:
      return residual_cor0_r6(p, ctx);
    case IdentityId::hu_kim:
      return residual_hu_kim(p, ctx);
    case IdentityId::cor2:
      return residual_cor2(p, ctx);
    case IdentityId::cor3:
      return residual_cor3(p, ctx);
    case IdentityId::cor4:
      return residual_cor4(p, ctx);
    case IdentityId::cor5:
      return residual_cor5(p, ctx);
    case IdentityId::cor6:
      return residual_cor6(p, ctx);
    case IdentityId::prop_e0:
      return residual_prop_e0(ctx);
    case IdentityId::prop_deriv:
      return residual_prop_deriv(p, ctx);
    case IdentityId::prop_addition:
      return residual_prop_addition(p, ctx);
    case IdentityId::prop_lambda:
      return residual_prop_lambda(p, ctx);
    case IdentityId::prop_reflect:
      return residual_prop_reflect(p, ctx);
    case IdentityId::lemma1:
      return residual_lemma1(p, ctx);
    case IdentityId::lemma2_r7:
      return residual_lemma2_r7(p, ctx);
    case IdentityId::lemma2_r8:
      return residual_lemma2_r8(p, ctx);
  }
  throw std::logic_error("build_residual: unknown identity");
}

}  // namespace detail

/// Checks one identity at one parameter point. Constraint violations and
/// insufficient table depth raise std::invalid_argument; a report is returned
/// otherwise, FAILS exactly when the residual is nonzero.
inline VerificationReport verify_identity(IdentityId id, const IdentityParams& p, VerifyContext& ctx) {
  p.validate();
  if (auto issue = applicability_issue(id, p))
    throw std::invalid_argument(std::string(identity_tag(id)) + ": " + *issue);
  const std::size_t needed = required_table_depth(id, p);
  if (needed > ctx.max_index())
    throw std::invalid_argument(std::string(identity_tag(id)) + ": table depth " +
                                std::to_string(ctx.max_index()) + " insufficient, need " +
                                std::to_string(needed));
  const auto t0 = std::chrono::steady_clock::now();
  XPoly residual = detail::build_residual(id, p, ctx);
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0);
  VerifyStatus status = residual.is_zero() ? VerifyStatus::holds : VerifyStatus::fails;
  return VerificationReport{id, p, status, std::move(residual), elapsed};
}

inline VerificationReport verify_identity(IdentityId id, const IdentityParams& p, const EulerTable& table) {
  VerifyContext ctx(table);
  return verify_identity(id, p, ctx);
}

// --- Parameter grids ---------------------------------------------------------

inline std::vector<AlphaPoly> default_lambdas() {
  return {AlphaPoly(Rat(0)), AlphaPoly(Rat(1)), AlphaPoly(Rat(-1)), AlphaPoly(Rat(1, 2)),
          AlphaPoly::alpha()};
}

/// Finite parameter ranges for one grid run. The four integer bounds are
/// inclusive; a negative bound gives an empty range. Identities built on the
/// (k, q, m, n) parameterization reuse max_n for m, max_l for n, max_r for q
/// and max_s for k. With filter_invalid set, points an identity does not
/// apply to are skipped; otherwise they are reported as usage errors.
struct GridSpec {
  int max_n = 5;
  int max_l = 5;
  int max_r = 5;
  int max_s = 5;
  std::vector<AlphaPoly> lambdas = default_lambdas();
  bool filter_invalid = true;
};

/// The grid each identity is expected to pass in full (the acceptance
/// bounds): the main identity family over [0,5]^4 with the five standard
/// scalars, corollaries over n,l <= 6 and r <= 4, properties to degree 30/15
/// and lemmas to degree 20.
inline GridSpec default_grid(IdentityId id) {
  GridSpec g;
  switch (id) {
    case IdentityId::thm1:
    case IdentityId::thm1_eq14:
    case IdentityId::qk_telescope:
      break;  // 5/5/5/5 with all five lambdas
    case IdentityId::cor1_r4:
      g.max_n = 6;
      g.max_l = 6;
      g.max_r = 4;
      g.max_s = 0;
      break;
    case IdentityId::eq_r2:
    case IdentityId::eq_r24:
    case IdentityId::eq_r3:
    case IdentityId::eq_r5:
    case IdentityId::cor6:
      g.max_n = 6;
      g.max_l = 6;
      g.max_r = 0;
      g.max_s = 0;
      break;
    case IdentityId::cor0_r6:
    case IdentityId::hu_kim:
      g.max_n = 6;
      g.max_l = 6;
      g.max_r = 4;
      g.max_s = 4;
      break;
    case IdentityId::cor2:
    case IdentityId::cor4:
      g.max_n = 6;
      g.max_l = 6;
      g.max_r = 4;
      g.max_s = 0;
      break;
    case IdentityId::cor3:
    case IdentityId::cor5:
      g.max_n = 6;
      g.max_l = 0;
      g.max_r = 4;
      g.max_s = 0;
      break;
    case IdentityId::prop_e0:
      g.max_n = 0;
      g.max_l = 0;
      g.max_r = 0;
      g.max_s = 0;
      break;
    case IdentityId::prop_deriv:
    case IdentityId::prop_lambda:
    case IdentityId::prop_reflect:
      g.max_n = 30;
      g.max_l = 0;
      g.max_r = 0;
      g.max_s = 0;
      break;
    case IdentityId::prop_addition:
      g.max_n = 15;
      g.max_l = 0;
      g.max_r = 0;
      g.max_s = 0;
      break;
    case IdentityId::lemma1:
    case IdentityId::lemma2_r7:
    case IdentityId::lemma2_r8:
      g.max_n = 20;
      g.max_l = 0;
      g.max_r = 0;
      g.max_s = 0;
      break;
  }
  return g;
}

/// Raw enumeration of the points an identity ranges over, lexicographic in
/// (n, l, r, s, lambda index); no applicability filtering happens here.
inline std::vector<IdentityParams> grid_points(IdentityId id, const GridSpec& g) {
  std::vector<IdentityParams> pts;
  const auto& lambdas = g.lambdas;
  switch (id) {
    case IdentityId::thm1:
    case IdentityId::thm1_eq14:
    case IdentityId::qk_telescope:
      for (int n = 0; n <= g.max_n; ++n)
        for (int l = 0; l <= g.max_l; ++l)
          for (int r = 0; r <= g.max_r; ++r)
            for (int s = 0; s <= g.max_s; ++s)
              for (const auto& lam : lambdas) pts.push_back({n, l, r, s, lam, {}});
      break;
    case IdentityId::cor1_r4:
      for (int n = 0; n <= g.max_n; ++n)
        for (int l = 0; l <= g.max_l; ++l)
          for (int r = 0; r <= g.max_r; ++r)
            for (const auto& lam : lambdas) pts.push_back({n, l, r, 0, lam, {}});
      break;
    case IdentityId::eq_r2:
    case IdentityId::eq_r24:
    case IdentityId::eq_r3:
    case IdentityId::cor6:
      for (int n = 0; n <= g.max_n; ++n)
        for (int l = 0; l <= g.max_l; ++l) pts.push_back({n, l, 0, 0, AlphaPoly(), {}});
      break;
    case IdentityId::eq_r5:
      for (int n = 0; n <= g.max_n; ++n)
        for (int l = 0; l <= g.max_l; ++l)
          for (const auto& lam : lambdas) pts.push_back({n, l, 0, 0, lam, {}});
      break;
    case IdentityId::cor0_r6:
    case IdentityId::hu_kim:
      for (int m = 0; m <= g.max_n; ++m)
        for (int n = 0; n <= g.max_l; ++n)
          for (int q = 0; q <= g.max_r; ++q)
            for (int k = 0; k <= g.max_s; ++k)
              pts.push_back({n, 0, 0, 0, AlphaPoly(), {{"k", k}, {"m", m}, {"q", q}}});
      break;
    case IdentityId::cor2:
    case IdentityId::cor4:
      for (int n = 0; n <= g.max_n; ++n)
        for (int l = 0; l <= g.max_l; ++l)
          for (int r = 0; r <= g.max_r; ++r) pts.push_back({n, l, r, 0, AlphaPoly(), {}});
      break;
    case IdentityId::cor3:
    case IdentityId::cor5:
      for (int n = 0; n <= g.max_n; ++n)
        for (int r = 0; r <= g.max_r; ++r) pts.push_back({n, 0, r, 0, AlphaPoly(), {}});
      break;
    case IdentityId::prop_e0:
      pts.push_back({0, 0, 0, 0, AlphaPoly(), {}});
      break;
    case IdentityId::prop_deriv:
    case IdentityId::prop_lambda:
    case IdentityId::prop_reflect:
    case IdentityId::lemma2_r7:
    case IdentityId::lemma2_r8:
      for (int n = 0; n <= g.max_n; ++n) pts.push_back({n, 0, 0, 0, AlphaPoly(), {}});
      break;
    case IdentityId::prop_addition:
    case IdentityId::lemma1:
      for (int n = 0; n <= g.max_n; ++n)
        for (const auto& lam : lambdas) pts.push_back({n, 0, 0, 0, lam, {}});
      break;
  }
  return pts;
}

struct GridError {
  IdentityId id;
  IdentityParams params;
  std::string message;
};

struct GridResult {
  std::vector<VerificationReport> reports;
  std::vector<GridError> errors;
  std::size_t holds = 0;
  std::size_t fails = 0;
};

/// Runs one identity over a grid, appending into an existing result so several
/// identities can share one memoizing context.
inline void grid_verify_into(IdentityId id, const GridSpec& g, VerifyContext& ctx, GridResult& out) {
  for (const auto& p : grid_points(id, g)) {
    try {
      if (auto issue = applicability_issue(id, p)) {
        if (!g.filter_invalid)
          out.errors.push_back({id, p, std::string(identity_tag(id)) + ": " + *issue});
        continue;
      }
      VerificationReport rep = verify_identity(id, p, ctx);
      rep.status == VerifyStatus::holds ? ++out.holds : ++out.fails;
      out.reports.push_back(std::move(rep));
    } catch (const std::invalid_argument& e) {
      out.errors.push_back({id, p, e.what()});
    }
  }
}

/// One report per (identity, point) in deterministic order; usage errors are
/// collected per point without aborting the rest of the grid.
inline GridResult grid_verify(const std::vector<IdentityId>& ids, const GridSpec& g,
                              const EulerTable& table) {
  VerifyContext ctx(table);
  GridResult out;
  for (IdentityId id : ids) grid_verify_into(id, g, ctx, out);
  return out;
}

}  // namespace eulerkit
