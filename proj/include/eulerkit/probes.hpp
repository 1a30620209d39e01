#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eulerkit/identity.hpp"
#include "eulerkit/verify.hpp"

namespace eulerkit {

/// Diagnostics for equations whose printed forms are suspect. verify_identity
/// always asserts the corrected form; the as-printed variants live only here.
enum class ProbeId { eq_r3, cor0_r6_as_printed, hu_kim_as_printed, eq_7_as_printed };

inline std::string_view probe_tag(ProbeId id) {
  switch (id) {
    case ProbeId::eq_r3:
      return "eq_r3";
    case ProbeId::cor0_r6_as_printed:
      return "cor0_r6_as_printed";
    case ProbeId::hu_kim_as_printed:
      return "hu_kim_as_printed";
    case ProbeId::eq_7_as_printed:
      return "eq_7_as_printed";
  }
  throw std::logic_error("probe_tag: unknown id");
}

/// A closed-form candidate for the constant factor in the eq_r3 probe.
struct ProbeCandidate {
  std::string name;
  std::function<Rat(const IdentityParams&)> value;
};

inline std::vector<ProbeCandidate> default_probe_candidates(ProbeId id) {
  if (id != ProbeId::eq_r3) return {};
  return {
      {"2(n+l+3) [as printed]", [](const IdentityParams& p) { return Rat(2 * (p.n + p.l + 3)); }},
      {"2(n+l+2)", [](const IdentityParams& p) { return Rat(2 * (p.n + p.l + 2)); }},
      {"n+l+2", [](const IdentityParams& p) { return Rat(p.n + p.l + 2); }},
      {"n+l+3", [](const IdentityParams& p) { return Rat(p.n + p.l + 3); }},
  };
}

struct ProbeReport {
  ProbeId id;
  IdentityParams params;
  bool corrected_holds = false;
  XPoly printed_residual;
  std::optional<Rat> solved_constant;
  std::optional<std::string> matched_candidate;
  std::string diagnostic;
};

namespace detail {

/// Solves lhs = c * factor for a single rational constant c, if one exists.
inline std::optional<Rat> solve_constant_factor(const XPoly& lhs, const XPoly& factor) {
  if (factor.is_zero()) return std::nullopt;
  if (lhs.is_zero()) return Rat(0);
  if (lhs.degree() != factor.degree()) return std::nullopt;
  const AlphaPoly& top_l = lhs.coeff(static_cast<std::size_t>(lhs.degree()));
  const AlphaPoly& top_f = factor.coeff(static_cast<std::size_t>(factor.degree()));
  if (!top_l.is_constant() || !top_f.is_constant()) return std::nullopt;
  Rat c = top_l.constant_value() / top_f.constant_value();
  if (lhs == factor.scaled(c)) return c;
  return std::nullopt;
}

/// The as-printed variant of the (k, q, m, n) identity: first-sum exponent
/// n+q-i (instead of m+q-i) and second-sum binomial C(m+q+j, j) (instead of
/// C(m+q+j, k)). Well-formed only when m <= n.
inline XPoly cor0_r6_as_printed_lhs(const IdentityParams& p, VerifyContext& ctx) {
  using B = VerifyContext::Basis;
  const int k = p.extra_at("k");
  const int q = p.extra_at("q");
  const int m = p.extra_at("m");
  const int n = p.n;
  if (m > n)
    throw std::invalid_argument(
        "cor0_r6_as_printed: ill-formed for m > n (the printed exponent n+q-i goes negative)");
  XPoly out;
  const auto apow = lambda_powers(AlphaPoly::alpha(), static_cast<std::size_t>(n + q));
  for (int i = 0; i <= m + q; ++i) {
    Rat b = binomial(m + q, i) * binomial(n + q + i, k);
    if (b.is_zero()) continue;
    out.add_scaled(ctx.base(B::symbolic, static_cast<std::size_t>(n + q + i - k)),
                   apow[static_cast<std::size_t>(n + q - i)].scaled(sign_pow(m) * b));
  }
  const XPoly neg = minus_x();
  for (int j = 0; j <= n + q; ++j) {
    Rat b = binomial(n + q, j) * binomial(m + q + j, j);
    if (b.is_zero()) continue;
    out.add_scaled(ctx.composed(B::symbolic, static_cast<std::size_t>(m + q + j - k), neg),
                   apow[static_cast<std::size_t>(n + q - j)].scaled(sign_pow(n + k + 1) * b));
  }
  return out;
}

/// The classical (k, q, m, n) identity with the second-sum upper limit taken
/// as `limit` instead of n+q; the printed display shows symbols foreign to
/// the statement there.
inline XPoly hu_kim_with_limit(const IdentityParams& p, VerifyContext& ctx, int limit) {
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
  for (int j = 0; j <= limit; ++j) {
    Rat b = binomial(n + q, j) * binomial(m + q + j, k);
    if (b.is_zero()) continue;
    const int idx = m + q + j - k;
    if (idx < 0) continue;
    out.add_scaled(ctx.composed(B::classical, static_cast<std::size_t>(idx), neg),
                   AlphaPoly(sign_pow(n) * b));
  }
  return out;
}

/// Addition formula with the index typo kept: E_n on the right instead of E_k.
inline XPoly eq_7_as_printed_residual(const IdentityParams& p, VerifyContext& ctx) {
  using B = VerifyContext::Basis;
  const std::size_t n = static_cast<std::size_t>(p.n);
  XPoly rhs;
  const auto ypow = lambda_powers(p.lambda, n);
  for (std::size_t k = 0; k <= n; ++k)
    rhs.add_scaled(ctx.base(B::symbolic, n),
                   ypow[n - k].scaled(binomial(p.n, static_cast<std::int64_t>(k))));
  return ctx.composed(B::symbolic, n, x_plus(p.lambda)) - rhs;
}

}  // namespace detail

/// Computes the exact diagnostic for one suspect printed form at one point.
/// Deterministic output; never reports a usage violation as a failure.
inline ProbeReport residual_probe(ProbeId id, const IdentityParams& p, VerifyContext& ctx,
                                  const std::vector<ProbeCandidate>& candidates) {
  p.validate();
  ProbeReport rep;
  rep.id = id;
  rep.params = p;
  const std::string point = "[" + p.to_string() + "] ";
  switch (id) {
    case ProbeId::eq_r3: {
      XPoly lhs = detail::eq_r24_style_lhs(p, ctx, p.n, p.l);
      XPoly factor = detail::eq_r3_structural_factor(p, ctx).scaled(sign_pow(p.n + 1));
      rep.solved_constant = detail::solve_constant_factor(lhs, factor);
      rep.corrected_holds = detail::residual_eq_r3(p, ctx).is_zero();
      if (rep.solved_constant) {
        for (const auto& cand : candidates) {
          if (cand.value(p) == *rep.solved_constant) {
            rep.matched_candidate = cand.name;
            break;
          }
        }
        rep.diagnostic = point + "LHS = (-1)^(n+1) * c * (E_{n+l+1}(y) - y^{n+l+1}) with c = " +
                         rep.solved_constant->to_string() + "; matching candidate: " +
                         rep.matched_candidate.value_or("none");
        // Residual of the as-printed constant 2(n+l+3).
        rep.printed_residual = lhs - factor.scaled(Rat(2 * (p.n + p.l + 3)));
      } else {
        rep.diagnostic = point + "no constant c satisfies LHS = (-1)^(n+1) * c * (E_{n+l+1}(y) - y^{n+l+1})";
        rep.printed_residual = lhs;
      }
      break;
    }
    case ProbeId::cor0_r6_as_printed: {
      rep.corrected_holds = detail::residual_cor0_r6(p, ctx).is_zero();
      rep.printed_residual = detail::cor0_r6_as_printed_lhs(p, ctx);
      rep.diagnostic = point + std::string("corrected form ") +
                       (rep.corrected_holds ? "holds" : "fails") + "; as-printed residual is " +
                       (rep.printed_residual.is_zero() ? "zero" : "nonzero: " + rep.printed_residual.to_string());
      break;
    }
    case ProbeId::hu_kim_as_printed: {
      if (auto issue = applicability_issue(IdentityId::hu_kim, p))
        throw std::invalid_argument("hu_kim_as_printed: " + *issue);
      const int alt_limit = p.extra_at("m") + p.extra_at("q");
      XPoly corrected = detail::residual_hu_kim(p, ctx);
      rep.corrected_holds = corrected.is_zero();
      rep.printed_residual = detail::hu_kim_with_limit(p, ctx, alt_limit);
      rep.diagnostic = point + "second-sum upper limit read as n+q: residual " +
                       (rep.corrected_holds ? "zero" : "nonzero") + "; read as m+q instead: residual " +
                       (rep.printed_residual.is_zero() ? "zero (binomial cut-off makes the readings agree)"
                                                       : "nonzero: " + rep.printed_residual.to_string());
      break;
    }
    case ProbeId::eq_7_as_printed: {
      rep.corrected_holds = detail::residual_prop_addition(p, ctx).is_zero();
      rep.printed_residual = detail::eq_7_as_printed_residual(p, ctx);
      rep.diagnostic = point + std::string("corrected addition formula (index k inside the sum) ") +
                       (rep.corrected_holds ? "holds" : "fails") + "; as-printed variant (index n) residual is " +
                       (rep.printed_residual.is_zero() ? "zero" : "nonzero");
      break;
    }
  }
  return rep;
}

inline ProbeReport residual_probe(ProbeId id, const IdentityParams& p, VerifyContext& ctx) {
  return residual_probe(id, p, ctx, default_probe_candidates(id));
}

}  // namespace eulerkit
