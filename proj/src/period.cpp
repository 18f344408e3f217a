#include "gross/period.hpp"

#include "gross/arith.hpp"
#include "gross/classgroup.hpp"

namespace gross {

GammaProduct gamma_product(std::int64_t q, const PrecisionContext& ctx) {
  require_class_group_prime(q);

  // Direct route: sum_c (c|q) ln Gamma(c/q), ascending c.
  Real log_sum = ctx.zero();
  for (std::int64_t c = 1; c < q; ++c) {
    const Real term = ln_gamma(ctx.ratio(c, q), ctx);
    if (jacobi(c, q) > 0) {
      log_sum += term;
    } else {
      log_sum -= term;
    }
  }

  // Pairing route: (q-c|q) = -(c|q) for q = 3 (mod 4), and
  // Gamma(x) / Gamma(1-x) = Gamma(x)^2 sin(pi x) / pi.
  Real log_pair = ctx.zero();
  const Real log_pi = log(ctx.pi());
  for (std::int64_t c = 1; c < q; ++c) {
    if (jacobi(c, q) < 0) continue;
    const Real x = ctx.ratio(c, q);
    log_pair += ln_gamma(x, ctx) * 2;
    log_pair += log(sin(ctx.pi() * x));
    log_pair -= log_pi;
  }

  GammaProduct out;
  out.q = q;
  out.log_G = log_sum;
  out.G = exp(log_sum);
  const Real paired = exp(log_pair);
  out.crosscheck_residual = abs(out.G - paired) / out.G;
  return out;
}

}  // namespace gross
