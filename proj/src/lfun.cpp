#include "gross/lfun.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "gross/arith.hpp"
#include "gross/classgroup.hpp"
#include "gross/errors.hpp"

namespace gross {

namespace {

constexpr long double kTwoPi = 6.283185307179586476925286766559L;

// log of sum_{n>M} n x^n = x^{M+1} ((M+1) - M x) / (1-x)^2, x = exp(-2 pi t/q)
long double log_tail(std::int64_t m, long double log_x) {
  const long double x = std::exp(log_x);
  const long double one_minus_x = -std::expm1(log_x);
  const auto mm = static_cast<long double>(m);
  return (mm + 1) * log_x + std::log((mm + 1) - mm * x) - 2 * std::log(one_minus_x);
}

// exp(-2 pi n t / q) / n for n = 1..cutoff (index 0 unused).
std::vector<Real> weights_for(const Rational& t, std::int64_t q, std::int64_t cutoff,
                              const PrecisionContext& ctx) {
  Real rate = ctx.pi() * (2 * t.num);
  rate /= static_cast<long>(t.den * q);
  const Real ratio = exp(-rate);
  std::vector<Real> out;
  out.reserve(static_cast<std::size_t>(cutoff) + 1);
  out.emplace_back(0, ctx.bits());
  Real power = ratio;
  for (std::int64_t n = 1; n <= cutoff; ++n) {
    if (n % 256 == 0) power = exp(-(rate * static_cast<long>(n)));
    out.push_back(power / static_cast<long>(n));
    power *= ratio;
  }
  return out;
}

Complex weighted_sum(const CoeffSeries& a, const std::vector<Real>& w, std::int64_t upto,
                     const PrecisionContext& ctx) {
  Complex acc = ctx.complex(0);
  for (std::int64_t n = 1; n <= upto; ++n) {
    fma_into(acc.re, a.a[n].re, w[n]);
    fma_into(acc.im, a.a[n].im, w[n]);
  }
  return acc;
}

Rational inverse(const Rational& t) { return {t.den, t.num}; }

}  // namespace

double TGrid::min_parameter() const {
  double m = 1e300;
  for (const Rational& t : {t0, t1, t2}) m = std::min({m, t.value(), 1.0 / t.value()});
  return m;
}

TGrid default_grid() { return {}; }

TGrid shifted_grid() { return {{9, 10}, {13, 10}, {4, 5}}; }

std::int64_t truncation(std::int64_t q, int digits, double t) {
  if (!(t > 0)) throw DomainError("smoothing parameter must be positive");
  const long double log_x = -kTwoPi * static_cast<long double>(t) / static_cast<long double>(q);
  const long double target = -(digits + 2) * std::log(10.0L);
  std::int64_t lo = 0;
  std::int64_t hi = 1;
  while (log_tail(hi, log_x) >= target) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (log_tail(mid, log_x) < target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

Complex smoothed_sum(const CoeffSeries& a, const Rational& t, std::int64_t q,
                     const PrecisionContext& ctx) {
  const std::int64_t need = truncation(q, ctx.digits(), t.value());
  if (a.cutoff() < need) {
    throw InputError("series has " + std::to_string(a.cutoff()) + " terms, need " +
                     std::to_string(need));
  }
  const auto w = weights_for(t, q, a.cutoff(), ctx);
  return weighted_sum(a, w, a.cutoff(), ctx);
}

SmoothingKernel::SmoothingKernel(std::int64_t q, const PrecisionContext& ctx, const TGrid& grid,
                                 int margin_digits)
    : q_(q), grid_(grid), ctx_(ctx) {
  cutoff_ = truncation(q, ctx.digits() + margin_digits, grid.min_parameter());
  for (const Rational& t : {grid.t0, grid.t1, grid.t2}) {
    weights_.push_back(weights_for(t, q, cutoff_, ctx));
  }
  for (const Rational& t : {grid.t0, grid.t1, grid.t2}) {
    weights_.push_back(weights_for(inverse(t), q, cutoff_, ctx));
  }
}

Complex SmoothingKernel::apply(const CoeffSeries& a, int slot) const {
  if (a.cutoff() < cutoff_) throw InputError("coefficient series shorter than the kernel cutoff");
  return weighted_sum(a, weights_.at(slot), cutoff_, ctx_);
}

CentralValue central_value(const CoeffSeries& a, const SmoothingKernel& kernel) {
  const PrecisionContext& ctx = kernel.context();
  const Complex s0 = kernel.apply(a, 0);
  const Complex s1 = kernel.apply(a, 1);
  const Complex s2 = kernel.apply(a, 2);
  // T(u) = sum conj(a_n)/n e^{-2 pi n u/q} = conj(sum a_n w_n) for real weights.
  const Complex dual0 = conj(kernel.apply(a, 3));
  const Complex dual1 = conj(kernel.apply(a, 4));
  const Complex dual2 = conj(kernel.apply(a, 5));

  const Complex den = dual1 - dual0;
  if (abs(den) < ctx.tolerance(ctx.digits() - 5)) {
    throw RootNumberUnstable("T(1/t1) - T(1/t0) vanishes to working precision");
  }
  CentralValue cv;
  cv.w = (s0 - s1) / den;
  cv.L = s0 + cv.w * dual0;
  cv.residual = abs(cv.L - (s2 + cv.w * dual2));
  cv.cutoff = kernel.cutoff();
  cv.nonzero = abs(cv.L) > ctx.tolerance(ctx.digits() / 2);
  cv.grid = kernel.grid();
  return cv;
}

CentralValue central_value(const CoeffSeries& a, std::int64_t q, const PrecisionContext& ctx,
                           const TGrid& grid) {
  return central_value(a, SmoothingKernel(q, ctx, grid));
}

void require_gross_prime(std::int64_t q) {
  if (q < 7 || !is_prime(static_cast<std::uint64_t>(q))) {
    throw InputError("q = " + std::to_string(q) + " is not prime");
  }
  if (q % 8 != 7) {
    throw InputError("q = " + std::to_string(q) + " is " + std::to_string(q % 8) +
                     " mod 8, not 7");
  }
}

TotalL total_L(std::int64_t q, const PrecisionContext& ctx, const TotalLOptions& options) {
  require_gross_prime(q);
  auto group = std::make_shared<const ClassGroup>(class_group(q));
  const HeckeChar psi = build_psi(group, ctx, options.branch);
  const SmoothingKernel kernel(q, ctx, options.grid, options.margin_digits);
  const TGrid alt_grid = shifted_grid();
  const std::int64_t length =
      std::max(kernel.cutoff(),
               truncation(q, ctx.digits() + options.margin_digits, alt_grid.min_parameter()));
  const PrimeTable primes(psi, length);
  const auto chars = characters(*group);

  TotalL out;
  out.q = q;
  out.h = group->h();
  out.invariants = group->invariants();
  out.factors.resize(chars.size());

  // Built on first use; only unstable characters need it.
  std::once_flag fallback_once;
  std::unique_ptr<SmoothingKernel> fallback;
  auto solve = [&](std::size_t i) -> CentralValue {
    const CoeffSeries series = coefficients(primes, *group, chars[i], static_cast<int>(i), ctx);
    try {
      return central_value(series, kernel);
    } catch (const RootNumberUnstable&) {
      std::call_once(fallback_once, [&] {
        fallback = std::make_unique<SmoothingKernel>(q, ctx, alt_grid, options.margin_digits);
      });
      return central_value(series, *fallback);
    }
  };

  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(chars.size())));
  if (jobs == 1) {
    for (std::size_t i = 0; i < chars.size(); ++i) out.factors[i] = solve(i);
  } else {
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(jobs);
    for (int j = 0; j < jobs; ++j) {
      workers.emplace_back([&, j] {
        try {
          for (std::size_t i = j; i < chars.size(); i += jobs) {
            out.factors[i] = solve(i);
          }
        } catch (...) {
          errors[j] = std::current_exception();
        }
      });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  out.L_total = ctx.real(1);
  for (const CentralValue& cv : out.factors) out.L_total *= norm(cv.L);
  return out;
}

TotalL total_L(std::int64_t q, int digits, const TotalLOptions& options) {
  return total_L(q, make_context(digits), options);
}

}  // namespace gross
