#pragma once

#include <array>
#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eulerkit/alpha_poly.hpp"
#include "eulerkit/euler_table.hpp"
#include "eulerkit/operators.hpp"
#include "eulerkit/rational.hpp"
#include "eulerkit/xpoly.hpp"

namespace eulerkit {

/// One tag per verified statement. Each maps to a single residual builder in
/// verify.hpp; the *_as_printed variants live separately in probes.hpp.
enum class IdentityId {
  thm1,
  thm1_eq14,
  cor1_r4,
  eq_r2,
  eq_r24,
  eq_r3,
  eq_r5,
  cor0_r6,
  hu_kim,
  cor2,
  cor3,
  cor4,
  cor5,
  cor6,
  prop_e0,
  prop_deriv,
  prop_addition,
  prop_lambda,
  prop_reflect,
  lemma1,
  lemma2_r7,
  lemma2_r8,
  qk_telescope,
};

inline constexpr std::array<std::pair<IdentityId, std::string_view>, 23> kIdentityTags{{
    {IdentityId::thm1, "thm1"},
    {IdentityId::thm1_eq14, "thm1_eq14"},
    {IdentityId::cor1_r4, "cor1_r4"},
    {IdentityId::eq_r2, "eq_r2"},
    {IdentityId::eq_r24, "eq_r24"},
    {IdentityId::eq_r3, "eq_r3"},
    {IdentityId::eq_r5, "eq_r5"},
    {IdentityId::cor0_r6, "cor0_r6"},
    {IdentityId::hu_kim, "hu_kim"},
    {IdentityId::cor2, "cor2"},
    {IdentityId::cor3, "cor3"},
    {IdentityId::cor4, "cor4"},
    {IdentityId::cor5, "cor5"},
    {IdentityId::cor6, "cor6"},
    {IdentityId::prop_e0, "prop_e0"},
    {IdentityId::prop_deriv, "prop_deriv"},
    {IdentityId::prop_addition, "prop_addition"},
    {IdentityId::prop_lambda, "prop_lambda"},
    {IdentityId::prop_reflect, "prop_reflect"},
    {IdentityId::lemma1, "lemma1"},
    {IdentityId::lemma2_r7, "lemma2_r7"},
    {IdentityId::lemma2_r8, "lemma2_r8"},
    {IdentityId::qk_telescope, "qk_telescope"},
}};

inline std::string_view identity_tag(IdentityId id) {
  for (const auto& [key, tag] : kIdentityTags)
    if (key == id) return tag;
  throw std::logic_error("identity_tag: unknown id");
}

inline std::optional<IdentityId> identity_from_tag(std::string_view tag) {
  for (const auto& [key, name] : kIdentityTags)
    if (name == tag) return key;
  return std::nullopt;
}

inline std::vector<IdentityId> all_identities() {
  std::vector<IdentityId> out;
  out.reserve(kIdentityTags.size());
  for (const auto& [key, tag] : kIdentityTags) out.push_back(key);
  return out;
}

/// Parameter point for one verification. The scalar slot lambda covers both
/// rational values and the formal symbol alpha (degree 1); identities built
/// around the (k, q, m, n) parameterization read k, q, m from `extra`.
struct IdentityParams {
  int n = 0;
  int l = 0;
  int r = 0;
  int s = 0;
  AlphaPoly lambda;
  std::map<std::string, int> extra;

  void validate() const {
    if (n < 0 || l < 0 || r < 0 || s < 0)
      throw std::invalid_argument("IdentityParams: integer parameters must be non-negative");
    if (lambda.degree() > 1)
      throw std::invalid_argument("IdentityParams: lambda degree must be at most 1");
    for (const auto& [key, value] : extra) {
      if (value < 0)
        throw std::invalid_argument("IdentityParams: extra parameter '" + key + "' must be non-negative");
    }
  }

  int extra_at(const std::string& key) const {
    auto it = extra.find(key);
    if (it == extra.end())
      throw std::invalid_argument("IdentityParams: missing extra parameter '" + key + "'");
    return it->second;
  }

  std::string to_string() const {
    std::string out = "n=" + std::to_string(n) + " l=" + std::to_string(l) + " r=" + std::to_string(r) +
                      " s=" + std::to_string(s) + " lambda=" + lambda.to_string();
    for (const auto& [key, value] : extra) out += " " + key + "=" + std::to_string(value);
    return out;
  }

  bool operator==(const IdentityParams&) const = default;
};

enum class VerifyStatus { holds, fails };

/// Outcome of checking one identity at one parameter point. The residual is
/// LHS - RHS in Q[a][x]; status is holds exactly when it is the zero
/// polynomial.
struct VerificationReport {
  IdentityId id;
  IdentityParams params;
  VerifyStatus status;
  XPoly residual;
  std::chrono::microseconds elapsed{0};
};

/// Memoized views of one EulerTable used by the identity builders: base
/// polynomials on three levels (symbolic order a, shifted order a-1, and the
/// classical order a = 1) plus their compositions with degree-one arguments.
/// Referentially transparent but not thread-safe; grids run sequentially.
class VerifyContext {
 public:
  enum class Basis { symbolic, order_down_one, classical };

  explicit VerifyContext(const EulerTable& table) : table_(&table) {}

  const EulerTable& table() const { return *table_; }
  std::size_t max_index() const { return table_->max_index(); }

  const XPoly& base(Basis basis, std::size_t m) {
    auto& slot = pick(basis);
    if (slot.size() <= m) slot.resize(m + 1);
    if (!slot[m]) {
      switch (basis) {
        case Basis::symbolic:
          slot[m] = euler_poly(m, *table_);
          break;
        case Basis::order_down_one:
          slot[m] = alpha_shift(base(Basis::symbolic, m), Rat(-1));
          break;
        case Basis::classical:
          slot[m] = alpha_eval(base(Basis::symbolic, m), Rat(1));
          break;
      }
    }
    return *slot[m];
  }

  /// Composition of the basis polynomial with a (typically degree-one)
  /// argument, memoized on the argument's canonical text.
  const XPoly& composed(Basis basis, std::size_t m, const XPoly& arg) {
    auto key = std::make_tuple(static_cast<int>(basis), m, arg.to_string());
    auto it = composed_.find(key);
    if (it != composed_.end()) return it->second;
    XPoly value = xpoly_compose(base(basis, m), arg);
    return composed_.emplace(std::move(key), std::move(value)).first->second;
  }

  /// Classical Genocchi polynomial G_m(x), m >= 1.
  const XPoly& genocchi(std::size_t m) {
    if (m == 0) throw std::domain_error("VerifyContext: Genocchi polynomials are indexed from 1");
    if (genocchi_.size() <= m) genocchi_.resize(m + 1);
    if (!genocchi_[m])
      genocchi_[m] = base(Basis::classical, m - 1).scaled(Rat(static_cast<std::int64_t>(m)));
    return *genocchi_[m];
  }

  /// Euler number E_m = 2^m E_m(1/2).
  const Rat& euler_number(std::size_t m) {
    if (euler_numbers_.size() <= m) euler_numbers_.resize(m + 1);
    if (!euler_numbers_[m]) {
      euler_numbers_[m] = pow2(static_cast<std::int64_t>(m)) *
                          xpoly_eval(base(Basis::classical, m), AlphaPoly(Rat(1, 2))).constant_value();
    }
    return *euler_numbers_[m];
  }

  /// Genocchi number G_m = G_m(0), m >= 1.
  const Rat& genocchi_number(std::size_t m) {
    if (m == 0) throw std::domain_error("VerifyContext: Genocchi numbers are indexed from 1");
    if (genocchi_numbers_.size() <= m) genocchi_numbers_.resize(m + 1);
    if (!genocchi_numbers_[m]) {
      genocchi_numbers_[m] =
          table_->constant_term(m - 1).eval(Rat(1)) * Rat(static_cast<std::int64_t>(m));
    }
    return *genocchi_numbers_[m];
  }

  /// Psi_{a-1} on the monomial-basis expansion of p.
  XPoly psi_order_down_one(const XPoly& p) {
    XPoly out;
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
      if (!p.coeff(j).is_zero()) out.add_scaled(base(Basis::order_down_one, j), p.coeff(j));
    }
    return out;
  }

 private:
  using Slot = std::vector<std::optional<XPoly>>;

  Slot& pick(Basis basis) {
    switch (basis) {
      case Basis::symbolic:
        return euler_;
      case Basis::order_down_one:
        return euler_down_one_;
      case Basis::classical:
        return classical_;
    }
    throw std::logic_error("VerifyContext: bad basis");
  }

  const EulerTable* table_;
  Slot euler_;
  Slot euler_down_one_;
  Slot classical_;
  Slot genocchi_;
  std::vector<std::optional<Rat>> euler_numbers_;
  std::vector<std::optional<Rat>> genocchi_numbers_;
  std::map<std::tuple<int, std::size_t, std::string>, XPoly> composed_;
};

/// Successive powers lambda^0 .. lambda^max as AlphaPoly values.
inline std::vector<AlphaPoly> lambda_powers(const AlphaPoly& lambda, std::size_t max_exp) {
  std::vector<AlphaPoly> out;
  out.reserve(max_exp + 1);
  out.emplace_back(Rat(1));
  for (std::size_t e = 1; e <= max_exp; ++e) out.push_back(out.back() * lambda);
  return out;
}

}  // namespace eulerkit
