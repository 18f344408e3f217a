#include "gross/report.hpp"

#include <chrono>
#include <string>

#include "gross/errors.hpp"
#include "gross/period.hpp"

namespace gross {

std::pair<bool, std::optional<mpz_class>> is_perfect_square(const mpz_class& n) {
  if (n < 0) throw DomainError("is_perfect_square of a negative number");
  mpz_class root;
  mpz_class rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (rem == 0) return {true, root};
  return {false, std::nullopt};
}

ShaReport sha_order(std::int64_t q, int digits, const ShaOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  require_gross_prime(q);
  const PrecisionContext ctx = make_context(digits);

  const TotalL total = total_L(q, ctx, options.lfun);
  const GammaProduct gamma = gamma_product(q, ctx);
  const CurveModel curve = curve_model(q, ctx);

  ShaReport r;
  r.q = q;
  r.h = total.h;
  r.invariants = total.invariants;
  r.digits = digits;
  r.L_total = total.L_total;
  r.G = gamma.G;

  // q^{3h/2} = q^h * q^{(h-1)/2} * sqrt(q), h odd.
  const Real qr = ctx.real(q);
  const Real q_power = pow(qr, r.h) * pow(qr, (r.h - 1) / 2) * sqrt(qr);
  const Real q_power_log = exp(log(qr) * (3 * r.h) / 2);
  r.power_check = abs(q_power - q_power_log) / q_power;

  const Real denominator = pow(ctx.real(2), 3 * r.h - 4) * pow(ctx.pi(), r.h) * r.G;
  r.sha_real = q_power * r.L_total / denominator;

  const Real rounded = round_nearest(r.sha_real);
  mpfr_get_z(r.sha_round.get_mpz_t(), rounded.get(), MPFR_RNDN);
  r.residual = abs(r.sha_real - rounded);
  r.verified = r.residual < ctx.tolerance(digits / 2) && r.sha_round >= 1;
  if (r.sha_round >= 0) {
    auto [square, root] = is_perfect_square(r.sha_round);
    r.is_square = square;
    r.sha_sqrt = root;
  }
  r.sha_odd = mpz_odd_p(r.sha_round.get_mpz_t()) != 0;

  r.max_w_dev = ctx.zero();
  r.max_chi_residual = ctx.zero();
  for (const CentralValue& cv : total.factors) {
    r.characters.push_back({abs(cv.L), cv.w, cv.residual});
    r.max_w_dev = max(r.max_w_dev, abs(abs(cv.w) - 1));
    r.max_chi_residual = max(r.max_chi_residual, cv.residual);
    r.all_nonzero = r.all_nonzero && cv.nonzero;
  }

  r.j = curve.j;
  r.m = curve.m;
  r.n = curve.n;
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void require_verified(const ShaReport& report) {
  if (report.verified) return;
  throw PrecisionExhausted("q = " + std::to_string(report.q) + ": |sha_real - round| = " +
                           report.residual.to_string(5) + " at " + std::to_string(report.digits) +
                           " digits; retry with more digits");
}

}  // namespace gross
