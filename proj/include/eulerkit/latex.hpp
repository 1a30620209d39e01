#pragma once

#include <string>

#include "eulerkit/alpha_poly.hpp"
#include "eulerkit/rational.hpp"
#include "eulerkit/xpoly.hpp"

namespace eulerkit {

inline std::string rat_to_latex(const Rat& r) {
  if (r.is_integer()) return r.num().to_string();
  std::string body = "\\frac{" + r.num().abs().to_string() + "}{" + r.den().to_string() + "}";
  return r.sign() < 0 ? "-" + body : body;
}

namespace detail {

inline std::string latex_power(const std::string& symbol, std::size_t power) {
  if (power == 1) return symbol;
  return symbol + "^{" + std::to_string(power) + "}";
}

inline std::string latex_monomial(const Rat& mag, std::size_t alpha_pow, std::size_t x_pow) {
  std::string parts;
  const bool have_symbol = alpha_pow > 0 || x_pow > 0;
  if (!mag.is_one() || !have_symbol) parts = rat_to_latex(mag);
  if (alpha_pow > 0) parts += (parts.empty() ? "" : " ") + latex_power("\\alpha", alpha_pow);
  if (x_pow > 0) parts += (parts.empty() ? "" : " ") + latex_power("x", x_pow);
  return parts;
}

}  // namespace detail

inline std::string alpha_poly_to_latex(const AlphaPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const Rat& c = p.coeff(i);
    if (c.is_zero()) continue;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    out += detail::latex_monomial(c.abs(), i, 0);
  }
  return out;
}

/// Descending powers of x, composite coefficients parenthesized, alpha as
/// \alpha. Mirrors the canonical text form.
inline std::string xpoly_to_latex(const XPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    const AlphaPoly& c = p.coeff(k);
    if (c.is_zero()) continue;
    std::size_t terms = 0;
    for (const auto& r : c.coeffs())
      if (!r.is_zero()) ++terms;
    if (terms > 1) {
      if (!out.empty()) out += " + ";
      out += "\\left(" + alpha_poly_to_latex(c) + "\\right)";
      if (k > 0) out += " " + detail::latex_power("x", k);
      continue;
    }
    const std::size_t d = static_cast<std::size_t>(c.degree());
    const Rat& m = c.coeff(d);
    if (out.empty()) {
      if (m.sign() < 0) out += "-";
    } else {
      out += m.sign() < 0 ? " - " : " + ";
    }
    out += detail::latex_monomial(m.abs(), d, k);
  }
  return out;
}

}  // namespace eulerkit
