#include <doctest.h>

#include <random>

#include "eulerkit/probes.hpp"
#include "eulerkit/report_json.hpp"
#include "eulerkit/theorem1.hpp"
#include "eulerkit/verify.hpp"
#include "test_support.hpp"

using namespace eulerkit;

namespace {

const EulerTable& table() {
  static EulerTable t = EulerTable::build(28);
  return t;
}

IdentityParams point(int n, int l, int r, int s, AlphaPoly lambda = AlphaPoly()) {
  return IdentityParams{n, l, r, s, std::move(lambda), {}};
}

IdentityParams kqmn(int k, int q, int m, int n) {
  return IdentityParams{n, 0, 0, 0, AlphaPoly(), {{"k", k}, {"m", m}, {"q", q}}};
}

/// A table with one constant term nudged, for sensitivity checks.
EulerTable corrupted_table(std::size_t bad_index) {
  auto terms = table().constant_terms();
  terms[bad_index] += AlphaPoly::from_coeffs({Rat(0), Rat(1, 3)});
  return EulerTable::from_constant_terms(std::move(terms));
}

}  // namespace

TEST_CASE("main identity at the degenerate corners") {
  VerifyContext ctx(table());
  // only E_0 contributes: both sides are the constant 2
  auto p = point(0, 0, 0, 1);
  CHECK(theorem1_lhs(p, ctx) == XPoly(Rat(2)));
  CHECK(theorem1_rhs(p, ctx) == XPoly(Rat(2)));
  CHECK(theorem1_rhs_expanded(p, ctx) == XPoly(Rat(2)));
  // s = 0: the right side is the empty sum
  auto p0 = point(0, 0, 0, 0);
  CHECK(theorem1_lhs(p0, ctx).is_zero());
  CHECK(theorem1_rhs(p0, ctx).is_zero());
  auto deep = point(2, 1, 0, 2);
  CHECK(theorem1_rhs(deep, ctx) == theorem1_rhs_expanded(deep, ctx));
  // 2 Psi_{a-1} of a single monomial: 2 E_1^(a-1)(x) = 2x - (a - 1)
  auto p1 = point(0, 1, 0, 1);
  CHECK(theorem1_rhs(p1, ctx) ==
        XPoly::x().scaled(Rat(2)) - XPoly::alpha() + XPoly(1));
  CHECK_THROWS_AS(theorem1_lhs(point(20, 20, 5, 0), ctx), std::invalid_argument);
}

TEST_CASE("main identity over a small dense grid") {
  GridSpec g;
  g.max_n = 2;
  g.max_l = 2;
  g.max_r = 2;
  g.max_s = 2;
  auto result = grid_verify({IdentityId::thm1, IdentityId::thm1_eq14, IdentityId::qk_telescope}, g,
                            table());
  CHECK(result.reports.size() == 3 * 81 * 5);
  CHECK(result.fails == 0);
  CHECK(result.errors.empty());
  CHECK(result.holds == result.reports.size());
}

TEST_CASE("verification reports carry exact residuals and timing") {
  VerifyContext ctx(table());
  auto rep = verify_identity(IdentityId::thm1, point(1, 1, 1, 1, AlphaPoly(Rat(1, 2))), ctx);
  CHECK(rep.status == VerifyStatus::holds);
  CHECK(rep.residual.is_zero());
  CHECK(rep.elapsed.count() >= 0);
  auto js = report_to_json(rep);
  CHECK(js["identity"] == "thm1");
  CHECK(js["status"] == "holds");
  CHECK(js["residual"] == "0");
  CHECK(js["params"]["lambda"] == "1/2");
}

TEST_CASE("telescoping structure") {
  VerifyContext ctx(table());
  // Q_0 for r = 0 is x^l (x+lambda)^n
  auto p = point(2, 1, 0, 3, AlphaPoly(Rat(1)));
  XPoly expected_q0 =
      XPoly::x() * xpoly_mul(XPoly::x() + XPoly(1), XPoly::x() + XPoly(1));
  CHECK(telescope_q(0, p) == expected_q0);
  CHECK(telescope_residual(p, ctx).is_zero());
  // nontrivial derivative order and symbolic scalar
  CHECK(telescope_residual(point(2, 1, 2, 3, AlphaPoly::alpha()), ctx).is_zero());
  // s = 0 degenerates gracefully
  CHECK(telescope_residual(point(1, 1, 1, 0), ctx).is_zero());
}

TEST_CASE("corollaries hold on their small grids") {
  GridSpec g;
  g.max_n = 3;
  g.max_l = 3;
  g.max_r = 2;
  g.max_s = 2;
  auto result = grid_verify(
      {IdentityId::cor1_r4, IdentityId::eq_r2, IdentityId::eq_r24, IdentityId::eq_r3,
       IdentityId::eq_r5, IdentityId::cor0_r6, IdentityId::hu_kim, IdentityId::cor2,
       IdentityId::cor3, IdentityId::cor4, IdentityId::cor5, IdentityId::cor6},
      g, table());
  CHECK(result.fails == 0);
  CHECK(result.errors.empty());
  CHECK(result.holds > 0);
}

TEST_CASE("spot values from the number identities") {
  VerifyContext ctx(table());
  // n = 1, r = 0: 2 E_1 + E_2 = -1 matches (-1)^1 C(1,0)
  CHECK(ctx.euler_number(1) == Rat(0));
  CHECK(ctx.euler_number(2) == Rat(-1));
  auto rep = verify_identity(IdentityId::cor3, point(1, 0, 0, 0), ctx);
  CHECK(rep.status == VerifyStatus::holds);
  Rat lhs = Rat(2) * ctx.euler_number(1) + ctx.euler_number(2);
  CHECK(lhs == Rat(-1));

  // Genocchi cross-sum at n = l = 1: G_1(x)+G_2(x)+G_1(-x)+G_2(-x) = 0
  auto rep6 = verify_identity(IdentityId::cor6, point(1, 1, 0, 0), ctx);
  CHECK(rep6.status == VerifyStatus::holds);
  XPoly direct = ctx.genocchi(1) + ctx.genocchi(2) +
                 xpoly_compose(ctx.genocchi(1), detail::minus_x()) +
                 xpoly_compose(ctx.genocchi(2), detail::minus_x());
  CHECK(direct.is_zero());
}

TEST_CASE("parameter constraints are usage errors, not failures") {
  VerifyContext ctx(table());
  CHECK_THROWS_AS(verify_identity(IdentityId::cor3, point(1, 0, 1, 0), ctx), std::invalid_argument);
  CHECK_THROWS_AS(verify_identity(IdentityId::cor5, point(1, 0, 3, 0), ctx), std::invalid_argument);
  CHECK_THROWS_AS(verify_identity(IdentityId::hu_kim, kqmn(2, 1, 1, 1), ctx), std::invalid_argument);
  CHECK_THROWS_AS(verify_identity(IdentityId::cor0_r6, kqmn(4, 1, 1, 5), ctx), std::invalid_argument);
  CHECK_THROWS_AS(verify_identity(IdentityId::cor6, point(0, 1, 0, 0), ctx), std::invalid_argument);
  CHECK_THROWS_AS(verify_identity(IdentityId::eq_r5, point(1, 1, 0, 0, AlphaPoly::alpha()), ctx),
                  std::invalid_argument);
  CHECK_THROWS_AS(verify_identity(IdentityId::prop_deriv, point(0, 0, 0, 0), ctx),
                  std::invalid_argument);
  IdentityParams bad = point(-1, 0, 0, 0);
  CHECK_THROWS_AS(verify_identity(IdentityId::thm1, bad, ctx), std::invalid_argument);
  IdentityParams deg2 = point(0, 0, 0, 0, AlphaPoly::pow(AlphaPoly::alpha(), 2));
  CHECK_THROWS_AS(verify_identity(IdentityId::thm1, deg2, ctx), std::invalid_argument);
}

TEST_CASE("grid error propagation without aborting") {
  GridSpec g;
  g.max_n = 3;
  g.max_l = 0;
  g.max_r = 3;
  g.max_s = 0;
  g.filter_invalid = false;
  auto result = grid_verify({IdentityId::cor3}, g, table());
  // odd r points surface as usage errors; the even ones all verify
  CHECK(result.errors.size() == 4 * 2);
  CHECK(result.reports.size() == 4 * 2);
  CHECK(result.fails == 0);
  for (const auto& err : result.errors) CHECK(err.message.find("even r") != std::string::npos);

  GridSpec filtered = g;
  filtered.filter_invalid = true;
  auto clean = grid_verify({IdentityId::cor3}, filtered, table());
  CHECK(clean.errors.empty());
  CHECK(clean.reports.size() == 4 * 2);
}

TEST_CASE("empty grid") {
  GridSpec g;
  g.max_n = -1;
  auto result = grid_verify({IdentityId::thm1}, g, table());
  CHECK(result.reports.empty());
  CHECK(result.holds == 0);
  CHECK(result.fails == 0);
}

TEST_CASE("appell properties and lemmas as identity reports") {
  GridSpec g;
  g.max_n = 10;
  g.max_l = 0;
  g.max_r = 0;
  g.max_s = 0;
  auto result = grid_verify({IdentityId::prop_e0, IdentityId::prop_deriv, IdentityId::prop_addition,
                             IdentityId::prop_lambda, IdentityId::prop_reflect, IdentityId::lemma1,
                             IdentityId::lemma2_r7, IdentityId::lemma2_r8},
                            g, table());
  CHECK(result.fails == 0);
  CHECK(result.errors.empty());
}

TEST_CASE("specialization chain: cor1_r4 is the s = 0 face of the main identity") {
  // On a corrupted table the residuals become nonzero but must stay equal,
  // which pins the face relation rather than comparing zero with zero.
  EulerTable bad = corrupted_table(3);
  VerifyContext ctx(bad);
  for (int n = 0; n <= 2; ++n) {
    for (int l = 0; l <= 2; ++l) {
      auto p = point(n, l, 1, 0, AlphaPoly(Rat(1, 2)));
      XPoly thm1_residual = theorem1_lhs(p, ctx) - theorem1_rhs(p, ctx);
      XPoly cor1_residual = detail::residual_cor1_r4(p, ctx);
      CHECK(thm1_residual == cor1_residual);
    }
  }
}

TEST_CASE("specialization chain: eq_r5 is cor1_r4 at r = 0, order 1") {
  EulerTable bad = corrupted_table(4);
  VerifyContext ctx(bad);
  for (int n = 0; n <= 3; ++n) {
    for (int l = 0; l <= 3; ++l) {
      auto p = point(n, l, 0, 0, AlphaPoly(Rat(2)));
      XPoly specialized = alpha_eval(detail::residual_cor1_r4(p, ctx), Rat(1)).scaled(sign_pow(n));
      CHECK(specialized == detail::residual_eq_r5(p, ctx));
    }
  }
}

namespace {

/// Cor. 4/5 shaped sums with the Genocchi slots fed by (m+1) * EulerNumber(m),
/// the substitution that derives them from cor2/cor3 by multiplying with r.
Rat cor4_formal_lhs(const IdentityParams& p, VerifyContext& ctx) {
  Rat acc;
  for (int k = 0; k <= p.n + p.r; ++k)
    acc += sign_pow(p.l) * binomial(p.n + p.r, k) * binomial(p.l + k + p.r, p.r - 1) *
           pow2(p.n + p.r - 1 - k) * Rat(p.l + k + 1) * ctx.euler_number(static_cast<std::size_t>(p.l + k));
  for (int k = 0; k <= p.l + p.r; ++k)
    acc += sign_pow(p.n + p.r) * binomial(p.l + p.r, k) * binomial(p.n + k + p.r, p.r - 1) *
           pow2(p.l + p.r - 1 - k) * Rat(p.n + k + 1) * ctx.euler_number(static_cast<std::size_t>(p.n + k));
  return acc;
}

Rat cor5_formal_lhs(const IdentityParams& p, VerifyContext& ctx) {
  Rat acc;
  for (int k = 0; k <= p.n + p.r; ++k)
    acc += binomial(p.n + p.r, k) * binomial(p.n + p.r + k, p.r - 1) * pow2(p.n + p.r - k) *
           Rat(p.n + k + 1) * ctx.euler_number(static_cast<std::size_t>(p.n + k));
  return acc;
}

Rat cor2_lhs_value(const IdentityParams& p, VerifyContext& ctx) {
  return detail::residual_cor2(p, ctx).coeff(0).coeff(0) + detail::cor2_style_rhs(p);
}

Rat cor3_lhs_value(const IdentityParams& p, VerifyContext& ctx) {
  return detail::residual_cor3(p, ctx).coeff(0).coeff(0) +
         sign_pow(p.n + p.r / 2) * binomial(p.n + p.r, p.r / 2);
}

}  // namespace

TEST_CASE("cor4 and cor5 follow from cor2 and cor3 under the index shift") {
  VerifyContext ctx(table());
  for (int n = 0; n <= 3; ++n) {
    for (int l = 0; l <= 3; ++l) {
      for (int r = 0; r <= 3; ++r) {
        auto p = point(n, l, r, 0);
        CHECK(cor4_formal_lhs(p, ctx) == Rat(r) * cor2_lhs_value(p, ctx));
        if (r % 2 == 0 && l == 0) CHECK(cor5_formal_lhs(p, ctx) == Rat(r) * cor3_lhs_value(p, ctx));
      }
    }
  }
}

TEST_CASE("residual probe pins the eq_r3 constant to 2(n+l+2)") {
  VerifyContext ctx(table());
  for (int n = 0; n <= 3; ++n) {
    for (int l = 0; l <= 3; ++l) {
      auto rep = residual_probe(ProbeId::eq_r3, point(n, l, 0, 0), ctx);
      REQUIRE(rep.solved_constant.has_value());
      CHECK(*rep.solved_constant == Rat(2 * (n + l + 2)));
      CHECK(rep.matched_candidate == std::string("2(n+l+2)"));
      CHECK(rep.corrected_holds);
      // the as-printed constant 2(n+l+3) leaves a nonzero residual
      CHECK(!rep.printed_residual.is_zero());
      CHECK(rep.diagnostic.find("c = " + Rat(2 * (n + l + 2)).to_string()) != std::string::npos);
    }
  }
}

TEST_CASE("as-printed variants are demonstrated non-identities") {
  VerifyContext ctx(table());
  auto cor0 = residual_probe(ProbeId::cor0_r6_as_printed, kqmn(0, 1, 1, 2), ctx);
  CHECK(cor0.corrected_holds);
  CHECK(!cor0.printed_residual.is_zero());
  CHECK_THROWS_AS(residual_probe(ProbeId::cor0_r6_as_printed, kqmn(0, 1, 2, 1), ctx),
                  std::invalid_argument);

  auto eq7 = residual_probe(ProbeId::eq_7_as_printed, point(2, 0, 0, 0, AlphaPoly(Rat(1))), ctx);
  CHECK(eq7.corrected_holds);
  CHECK(!eq7.printed_residual.is_zero());

  // second-sum limit reading: m+q truncates real terms when m < n
  auto hk = residual_probe(ProbeId::hu_kim_as_printed, kqmn(1, 1, 0, 3), ctx);
  CHECK(hk.corrected_holds);
  CHECK(!hk.printed_residual.is_zero());
  // when m >= n the binomial cut-off makes both readings agree
  auto hk2 = residual_probe(ProbeId::hu_kim_as_printed, kqmn(1, 1, 3, 1), ctx);
  CHECK(hk2.corrected_holds);
  CHECK(hk2.printed_residual.is_zero());
}

TEST_CASE("grid report serialization shape") {
  GridSpec g;
  g.max_n = 1;
  g.max_l = 1;
  g.max_r = 0;
  g.max_s = 1;
  g.lambdas = {AlphaPoly(Rat(0)), AlphaPoly::alpha()};
  auto result = grid_verify({IdentityId::thm1}, g, table());
  auto js = grid_to_json(result);
  CHECK(js["reports"].size() == result.reports.size());
  CHECK(js["summary"]["thm1"]["holds"] == result.holds);
  CHECK(js["summary"]["thm1"]["fails"] == 0);
  CHECK(js["fails"] == 0);
  CHECK(js["errors"].empty());
}

TEST_CASE("a corrupted table is caught by the main identity") {
  EulerTable bad = corrupted_table(3);
  GridSpec g;
  g.max_n = 2;
  g.max_l = 2;
  g.max_r = 1;
  g.max_s = 1;
  auto result = grid_verify({IdentityId::thm1}, g, bad);
  CHECK(result.fails > 0);
}
