#pragma once

// Real-embedded Weierstrass model of the Gross curve A(q):
//   y^2 = x^3 + (m q / 24) x - n q^2 / 864,  m^3 = j, -n^2 q = j - 1728,
//   sgn(n) = (2|q), j = j((1 + sqrt(-q))/2).

#include <cstdint>

#include "gross/numerics.hpp"

namespace gross {

struct CurveModel {
  std::int64_t q = 0;
  Real j;
  Real m;
  Real n;
  /// Coefficients of x and 1 in the displayed equation.
  Real A;
  Real B;
  /// -16 (4 A^3 + 27 B^2)
  Real discriminant;
  /// Relative error of j(y^2 = x^3 + (A/2) x + B) against j; see curve_model.
  Real round_trip_residual;
};

/// j(tau) at tau = (1 + i sqrt(q))/2 from the Eisenstein series E4 and E6.
Real j_invariant(std::int64_t q, const PrecisionContext& ctx);

/// 1728 * 4A^3 / (4A^3 + 27B^2)
Real weierstrass_j(const Real& A, const Real& B);

CurveModel curve_model(std::int64_t q, const PrecisionContext& ctx);

}  // namespace gross
