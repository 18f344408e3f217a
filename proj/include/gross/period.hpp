#pragma once

#include <cstdint>

#include "gross/numerics.hpp"

namespace gross {

/// G(q) = prod_{0<c<q} Gamma(c/q)^{(c|q)}.
struct GammaProduct {
  std::int64_t q = 0;
  Real G;
  Real log_G;
  /// Relative difference between the log-sum and reflection-pairing routes.
  Real crosscheck_residual;
};

/// q must be a prime with q = 3 (mod 4).
GammaProduct gamma_product(std::int64_t q, const PrecisionContext& ctx);

}  // namespace gross
