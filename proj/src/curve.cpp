#include "gross/curve.hpp"

#include <cmath>
#include <string>

#include "gross/arith.hpp"
#include "gross/classgroup.hpp"
#include "gross/errors.hpp"
#include "gross/lfun.hpp"

namespace gross {

namespace {

constexpr std::int64_t kMaxSeriesDepth = 2000;

std::int64_t divisor_power_sum(std::int64_t n, int k) {
  std::int64_t total = 1;
  for (const PrimePower& pp : factorize(static_cast<std::uint64_t>(n))) {
    std::int64_t pk = 1;
    for (int i = 0; i < k; ++i) pk *= static_cast<std::int64_t>(pp.prime);
    std::int64_t term = 1;
    std::int64_t power = 1;
    for (int e = 0; e < pp.exponent; ++e) {
      power *= pk;
      term += power;
    }
    total *= term;
  }
  return total;
}

// E4^3 - E6^2 = 1728 Delta is of size |nome|, and 4A^3 + 27B^2 cancels the
// same number of digits; both are evaluated with this many extra.
PrecisionContext widened(std::int64_t q, const PrecisionContext& ctx) {
  const double log10_inv_nome = M_PI * std::sqrt(static_cast<double>(q)) / std::log(10.0);
  const int extra = static_cast<int>(std::ceil(log10_inv_nome)) + 5;
  return make_context(ctx.digits() + extra);
}

Real narrow(const Real& x, const PrecisionContext& ctx) {
  Real out(ctx.bits());
  mpfr_set(out.get(), x.get(), MPFR_RNDN);
  return out;
}

Real j_wide(std::int64_t q, const PrecisionContext& wide) {

  const Real nome = -exp(-(wide.pi() * sqrt(wide.real(q))));
  const double target = (wide.working_digits() + 5) * std::log(10.0);
  const auto depth = static_cast<std::int64_t>(std::ceil(target / (M_PI * std::sqrt(static_cast<double>(q))))) + 1;
  if (depth > kMaxSeriesDepth) {
    throw ResourceError("Eisenstein series depth " + std::to_string(depth) + " exceeds limit");
  }

  Real e4_sum = wide.zero();
  Real e6_sum = wide.zero();
  Real power = wide.real(1);
  for (std::int64_t k = 1; k <= depth; ++k) {
    power *= nome;
    e4_sum += power * divisor_power_sum(k, 3);
    e6_sum += power * divisor_power_sum(k, 5);
  }
  const Real e4 = e4_sum * 240 + 1;
  const Real e6 = wide.real(1) - e6_sum * 504;
  const Real e4_cubed = e4 * e4 * e4;
  return e4_cubed * 1728 / (e4_cubed - e6 * e6);
}

}  // namespace

Real j_invariant(std::int64_t q, const PrecisionContext& ctx) {
  require_class_group_prime(q);
  return narrow(j_wide(q, widened(q, ctx)), ctx);
}

Real weierstrass_j(const Real& A, const Real& B) {
  const Real four_a3 = A * A * A * 4;
  const Real denom = four_a3 + B * B * 27;
  if (denom.is_zero()) throw DomainError("singular Weierstrass model");
  return four_a3 * 1728 / denom;
}

CurveModel curve_model(std::int64_t q, const PrecisionContext& ctx) {
  require_gross_prime(q);
  const PrecisionContext wide = widened(q, ctx);
  const Real j = j_wide(q, wide);
  if (j.is_zero() || j == wide.real(1728)) {
    throw DomainError("degenerate j-invariant for q = " + std::to_string(q));
  }
  const Real m = cbrt(j);
  const Real radicand = (wide.real(1728) - j) / q;
  if (radicand.sign() <= 0) throw InternalError("(1728 - j)/q must be positive");
  Real n = sqrt(radicand);
  if (jacobi(2, q) < 0) n = -n;

  const Real A = m * q / 24;
  const Real B = -(n * (q * q)) / 864;
  const Real disc = -((A * A * A * 4 + B * B * 27) * 16);

  // The displayed x-coefficient m q / 24 is twice the one whose curve has
  // j-invariant j; the round trip is checked on m q / 48.
  const Real j_back = weierstrass_j(A / 2, B);

  CurveModel model;
  model.q = q;
  model.j = narrow(j, ctx);
  model.m = narrow(m, ctx);
  model.n = narrow(n, ctx);
  model.A = narrow(A, ctx);
  model.B = narrow(B, ctx);
  model.discriminant = narrow(disc, ctx);
  model.round_trip_residual = narrow(abs(j_back - j) / abs(j), ctx);
  return model;
}

}  // namespace gross
