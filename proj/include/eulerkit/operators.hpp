#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "eulerkit/alpha_poly.hpp"
#include "eulerkit/binomial.hpp"
#include "eulerkit/euler_table.hpp"
#include "eulerkit/xpoly.hpp"

namespace eulerkit {

/// The umbral map Psi_{a+shift}: x^n goes to E_n^(a+shift)(x), extended
/// Q[a]-linearly, so alpha inside the input coefficients passes through
/// untouched and only the basis images carry the order shift.
inline XPoly psi_apply(const XPoly& p, const Rat& shift, const EulerTable& table) {
  if (p.degree() > static_cast<int>(table.max_index()))
    throw std::invalid_argument("psi_apply: degree exceeds table depth");
  XPoly out;
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
    const AlphaPoly& c = p.coeff(j);
    if (c.is_zero()) continue;
    out.add_scaled(alpha_shift(euler_poly(j, table), shift), c);
  }
  return out;
}

/// Lambda(p) = p(x + 1) + p(x).
inline XPoly lambda_apply(const XPoly& p) {
  return xpoly_compose(p, XPoly::from_coeffs({AlphaPoly(Rat(1)), AlphaPoly(Rat(1))})) + p;
}

/// D^r / r! : sends x^m to C(m, r) x^(m-r); zero once r exceeds the degree.
inline XPoly scaled_derivative(const XPoly& p, std::size_t r) {
  if (r == 0) return p;
  if (p.degree() < static_cast<int>(r)) return XPoly();
  std::vector<AlphaPoly> out(p.coeffs().size() - r);
  for (std::size_t m = r; m < p.coeffs().size(); ++m) {
    out[m - r] = p.coeff(m).scaled(binomial(static_cast<std::int64_t>(m), static_cast<std::int64_t>(r)));
  }
  return XPoly::from_coeffs(std::move(out));
}

}  // namespace eulerkit
