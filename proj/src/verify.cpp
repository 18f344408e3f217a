#include "gross/verify.hpp"

#include <cmath>
#include <memory>
#include <numeric>

#include "gross/arith.hpp"
#include "gross/curve.hpp"
#include "gross/errors.hpp"
#include "gross/lfun.hpp"
#include "gross/period.hpp"
#include "gross/report.hpp"

namespace gross {

namespace {

std::string sci(const Real& x) { return x.to_string(3); }

CheckResult check(std::string name, std::int64_t q, bool passed, std::string detail) {
  return {std::move(name), q, passed, std::move(detail)};
}

}  // namespace

long class_number_formula(std::int64_t q) {
  require_class_group_prime(q);
  long sum = 0;
  for (std::int64_t c = 1; c < q; ++c) sum += c * jacobi(c, q);
  return -sum / q;
}

Complex coefficient_by_enumeration(const HeckeChar& psi, const ClassChar& chi, std::int64_t n) {
  const PrecisionContext& ctx = psi.context();
  Complex total = ctx.complex(0);
  if (n % psi.q() == 0) return total;
  for (const IdealRep& ideal : enumerate_ideals_of_norm(psi.q(), n)) {
    const std::int64_t c = (ideal.b * ideal.b + psi.q()) / (4 * ideal.a);
    total += psi(ideal) * chi(psi.group(), {ideal.a, ideal.b, c}, ctx);
  }
  return total;
}

std::vector<CheckResult> run_verification(const VerifyConfig& config) {
  std::vector<CheckResult> out;
  const PrecisionContext ctx = make_context(config.digits);
  const int d = config.digits;

  for (std::int64_t q : config.qs) {
    try {
      require_gross_prime(q);
    } catch (const InputError& e) {
      out.push_back(check("input", q, false, e.what()));
      continue;
    }
    auto group = std::make_shared<const ClassGroup>(class_group(q));
    const long formula = class_number_formula(q);
    out.push_back(check("class_number", q, formula == group->h(),
                        "h=" + std::to_string(group->h()) + " formula=" + std::to_string(formula)));

    const HeckeChar psi = build_psi(group, ctx);
    const auto chars = characters(*group);
    const std::int64_t cutoff = config.oracle_cutoff;
    const PrimeTable primes(psi, cutoff);

    // Multiplicative assembly against direct ideal enumeration.
    {
      const Real tol = ctx.tolerance(d - 3);
      Real worst = ctx.zero();
      std::int64_t worst_n = 0;
      for (std::size_t i = 0; i < chars.size(); ++i) {
        CoeffSeries series = coefficients(primes, *group, chars[i], static_cast<int>(i), ctx);
        if (config.corrupt_coefficients && i == 0) series.a[2].re += ctx.tolerance(8);
        for (std::int64_t n = 1; n <= cutoff; ++n) {
          const Real err = abs(series.a[n] - coefficient_by_enumeration(psi, chars[i], n));
          if (err > worst) {
            worst = err;
            worst_n = n;
          }
        }
      }
      out.push_back(check("coefficient_oracle", q, worst < tol,
                          "max err " + sci(worst) + " at n=" + std::to_string(worst_n) +
                              " (n<=" + std::to_string(cutoff) + ")"));
    }

    // Multiplicativity and Hasse bound on every twist.
    {
      const Real tol = ctx.tolerance(d - 3);
      Real worst_mult = ctx.zero();
      Real worst_hasse = ctx.zero();
      const std::int64_t limit = std::min<std::int64_t>(cutoff, 1000);
      for (std::size_t i = 0; i < chars.size(); ++i) {
        const CoeffSeries s = coefficients(primes, *group, chars[i], static_cast<int>(i), ctx);
        for (std::int64_t m = 2; m * m <= limit; ++m) {
          for (std::int64_t n = m + 1; m * n <= limit; ++n) {
            if (std::gcd(m, n) != 1) continue;
            worst_mult = max(worst_mult, abs(s.a[m * n] - s.a[m] * s.a[n]));
          }
        }
        for (std::int64_t p = 2; p <= cutoff; ++p) {
          if (!is_prime(static_cast<std::uint64_t>(p)) || p == q) continue;
          const Real excess = abs(s.a[p]) - sqrt(ctx.real(p)) * 2;
          worst_hasse = max(worst_hasse, excess);
        }
      }
      out.push_back(check("multiplicativity", q, worst_mult < tol, "max defect " + sci(worst_mult)));
      out.push_back(check("hasse_bound", q, worst_hasse < tol,
                          "max |a_p| - 2 sqrt(p) = " + sci(worst_hasse)));
    }

    {
      const GammaProduct g = gamma_product(q, ctx);
      out.push_back(check("gamma_pairing", q, g.crosscheck_residual < ctx.tolerance(d - 3),
                          "relative gap " + sci(g.crosscheck_residual)));
    }

    {
      const TotalL base = total_L(q, ctx);
      Real w_dev = ctx.zero();
      Real residual = ctx.zero();
      for (const CentralValue& cv : base.factors) {
        w_dev = max(w_dev, abs(abs(cv.w) - 1));
        residual = max(residual, cv.residual);
      }
      out.push_back(check("root_numbers", q,
                          w_dev < ctx.tolerance(d / 2) && residual < ctx.tolerance(d - 5),
                          "max ||w|-1| " + sci(w_dev) + ", max residual " + sci(residual)));

      TotalLOptions shifted;
      shifted.grid = shifted_grid();
      const TotalL other_grid = total_L(q, ctx, shifted);
      const Real grid_gap = abs(other_grid.L_total - base.L_total) / base.L_total;
      out.push_back(check("t_grid_invariance", q, grid_gap < ctx.tolerance(d - 5),
                          "relative gap " + sci(grid_gap)));

      TotalLOptions branch;
      branch.branch.assign(group->generators().size(), 1);
      const TotalL rebranched = total_L(q, ctx, branch);
      const Real branch_gap = abs(rebranched.L_total - base.L_total) / base.L_total;
      out.push_back(check("branch_invariance", q, branch_gap < ctx.tolerance(d - 3),
                          "relative gap " + sci(branch_gap)));
    }

    {
      const ShaReport r = sha_order(q, d);
      out.push_back(check("sha_square", q, r.verified && r.is_square,
                          "sha=" + r.sha_round.get_str() + " residual " + sci(r.residual)));
    }

    {
      const CurveModel c = curve_model(q, ctx);
      out.push_back(check("curve_round_trip", q, c.round_trip_residual < ctx.tolerance(d - 3),
                          "relative gap " + sci(c.round_trip_residual)));
    }
  }
  return out;
}

}  // namespace gross
