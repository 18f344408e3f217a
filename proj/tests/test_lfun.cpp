#include <memory>

#include "doctest.h"
#include "gross/errors.hpp"
#include "gross/lfun.hpp"
#include "support.hpp"

using namespace gross;
using gross::test::Rng;

namespace {

std::vector<CoeffSeries> twisted_series(std::int64_t q, const PrecisionContext& ctx,
                                        std::int64_t cutoff) {
  auto group = std::make_shared<const ClassGroup>(class_group(q));
  const HeckeChar psi = build_psi(group, ctx);
  std::vector<CoeffSeries> out;
  for (const ClassChar& chi : characters(*group)) out.push_back(coefficients(psi, chi, cutoff));
  return out;
}

CoeffSeries conjugated(const CoeffSeries& a) {
  CoeffSeries b = a;
  for (Complex& z : b.a) z = conj(z);
  return b;
}

}  // namespace

TEST_CASE("truncation grows with digits") {
  for (std::int64_t q : {7, 71, 503}) {
    for (double t : {0.8, 1.0, 1.25}) {
      std::int64_t last = 0;
      for (int d = 30; d <= 60; d += 5) {
        const std::int64_t m = truncation(q, d, t);
        CHECK(m > last);
        last = m;
      }
    }
  }
}

TEST_CASE("truncation roughly doubles with q") {
  for (double t : {0.8, 1.0, 1.2}) {
    const double ratio = static_cast<double>(truncation(1006, 32, t)) / truncation(503, 32, t);
    CHECK(ratio > 1.9);
    CHECK(ratio < 2.1);
  }
  CHECK_THROWS_AS(truncation(7, 32, 0.0), DomainError);
  CHECK_THROWS_AS(truncation(7, 32, -1.0), DomainError);
}

TEST_CASE("smoothed_sum elementary series") {
  const PrecisionContext ctx = make_context(32);
  const std::int64_t q = 23;
  const Rational t{1, 1};
  const std::int64_t m = truncation(q, 32, t.value());
  CoeffSeries delta{q, 0, std::vector<Complex>(m + 1, ctx.complex(0))};
  delta.a[1] = ctx.complex(1);
  const Complex s = smoothed_sum(delta, t, q, ctx);
  CHECK(abs(s.re - exp(-(ctx.pi() * 2 / q))) < ctx.tolerance(36));
  CHECK(abs(s.im) < ctx.tolerance(40));

  CoeffSeries zero{q, 0, std::vector<Complex>(m + 1, ctx.complex(0))};
  CHECK(abs(smoothed_sum(zero, t, q, ctx)) < ctx.tolerance(40));

  CoeffSeries short_series{q, 0, std::vector<Complex>(m / 2, ctx.complex(0))};
  CHECK_THROWS_AS(smoothed_sum(short_series, t, q, ctx), InputError);
}

TEST_CASE("smoothed_sum is linear") {
  const PrecisionContext ctx = make_context(32);
  const std::int64_t q = 31;
  const std::int64_t m = truncation(q, 32, 0.8);
  Rng rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    CoeffSeries a{q, 0, {}}, b{q, 0, {}}, c{q, 0, {}};
    const long k = static_cast<long>(rng.uniform(-5, 5));
    for (std::int64_t n = 0; n <= m; ++n) {
      Complex x{ctx.real(static_cast<long>(rng.uniform(-n, n))), ctx.real(static_cast<long>(rng.uniform(-n, n)))};
      Complex y{ctx.real(static_cast<long>(rng.uniform(-n, n))), ctx.real(static_cast<long>(rng.uniform(-n, n)))};
      c.a.push_back(x + y * k);
      a.a.push_back(std::move(x));
      b.a.push_back(std::move(y));
    }
    const Rational t{4, 5};
    const Complex lhs = smoothed_sum(c, t, q, ctx);
    const Complex rhs = smoothed_sum(a, t, q, ctx) + smoothed_sum(b, t, q, ctx) * k;
    CHECK(abs(lhs - rhs) < ctx.tolerance(30));
  }
}

TEST_CASE("doubling the series length leaves S(t) unchanged") {
  const PrecisionContext ctx = make_context(32);
  for (std::int64_t q : {23, 71}) {
    for (const Rational& t : {Rational{1, 1}, Rational{4, 5}, Rational{5, 6}}) {
      const std::int64_t m = truncation(q, 32, t.value());
      for (const CoeffSeries& full : twisted_series(q, ctx, 2 * m)) {
        CoeffSeries head = full;
        head.a.resize(m + 1);
        CHECK(abs(smoothed_sum(full, t, q, ctx) - smoothed_sum(head, t, q, ctx)) < ctx.tolerance(32));
      }
    }
  }
}

TEST_CASE("q = 7 central value is L of the conductor-49 curve") {
  const PrecisionContext ctx = make_context(32);
  const TotalL total = total_L(7, ctx);
  REQUIRE(total.factors.size() == 1);
  const CentralValue& cv = total.factors[0];
  CHECK(abs(cv.L.re - test::parse(test::kL49, ctx)) < ctx.tolerance(30));
  CHECK(abs(cv.L.im) < ctx.tolerance(30));
  CHECK(abs(cv.w - ctx.complex(1)) < ctx.tolerance(30));
  CHECK(abs(total.L_total - norm(cv.L)) < ctx.tolerance(40));
}

TEST_CASE("root numbers and residuals") {
  const PrecisionContext ctx = make_context(32);
  for (std::int64_t q : {23, 31, 47, 71, 151}) {
    const TotalL total = total_L(q, ctx);
    CHECK(static_cast<int>(total.factors.size()) == total.h);
    for (const CentralValue& cv : total.factors) {
      CHECK(abs(abs(cv.w) - 1) < ctx.tolerance(16));
      CHECK(cv.residual < ctx.tolerance(27));
      CHECK(cv.nonzero);
    }
    // Trivial twist: real coefficients, real L and w = +1.
    const CentralValue& self = total.factors[0];
    CHECK(abs(self.w - ctx.complex(1)) < ctx.tolerance(25));
    CHECK(abs(self.L.im) < ctx.tolerance(28));
    CHECK(total.L_total > 0);
  }
}

TEST_CASE("conjugate pairing") {
  const PrecisionContext ctx = make_context(32);
  for (std::int64_t q : {23, 71}) {
    const SmoothingKernel kernel(q, ctx);
    for (const CoeffSeries& a : twisted_series(q, ctx, kernel.cutoff())) {
      const CentralValue cv = central_value(a, kernel);
      const CentralValue cc = central_value(conjugated(a), kernel);
      CHECK(abs(cc.L - conj(cv.L)) < ctx.tolerance(28));
      CHECK(abs(cc.w - conj(cv.w)) < ctx.tolerance(25));
    }
  }
}

TEST_CASE("a longer series leaves L unchanged") {
  const PrecisionContext ctx = make_context(32);
  const SmoothingKernel base(71, ctx);
  const SmoothingKernel longer(71, ctx, default_grid(), 32);
  CHECK(longer.cutoff() > base.cutoff());
  for (const CoeffSeries& a : twisted_series(71, ctx, longer.cutoff())) {
    CHECK(abs(central_value(a, base).L - central_value(a, longer).L) < ctx.tolerance(30));
  }
}

TEST_CASE("t-grid independence") {
  const PrecisionContext ctx = make_context(32);
  for (std::int64_t q : {7, 23, 31, 71}) {
    TotalLOptions shifted;
    shifted.grid = shifted_grid();
    const TotalL a = total_L(q, ctx);
    const TotalL b = total_L(q, ctx, shifted);
    CHECK(test::relative_gap(b.L_total, a.L_total) < ctx.tolerance(27));
    for (std::size_t i = 0; i < a.factors.size(); ++i) {
      CHECK(abs(a.factors[i].L - b.factors[i].L) < ctx.tolerance(27));
    }
  }
}

TEST_CASE("branch invariance of the total") {
  const PrecisionContext ctx = make_context(32);
  for (std::int64_t q : {23, 31, 71}) {
    const TotalL base = total_L(q, ctx);
    const int d = base.invariants.empty() ? 1 : base.invariants[0];
    for (int shift = 1; shift < d; ++shift) {
      TotalLOptions opts;
      opts.branch = {shift};
      const TotalL other = total_L(q, ctx, opts);
      CHECK(test::relative_gap(other.L_total, base.L_total) < ctx.tolerance(29));
    }
  }
}

TEST_CASE("precision scaling: 32 and 48 digits agree") {
  for (std::int64_t q : {23, 71}) {
    const TotalL a = total_L(q, 32);
    const TotalL b = total_L(q, 48);
    CHECK(abs(a.L_total - b.L_total) < make_context(48).tolerance(30));
  }
}

TEST_CASE("threaded evaluation is bitwise identical") {
  const PrecisionContext ctx = make_context(32);
  TotalLOptions threaded;
  threaded.jobs = 4;
  const TotalL a = total_L(71, ctx);
  const TotalL b = total_L(71, ctx, threaded);
  CHECK(a.L_total == b.L_total);
}

TEST_CASE("q must be a prime 7 mod 8") {
  const PrecisionContext ctx = make_context(20);
  CHECK_THROWS_WITH_AS(total_L(73, ctx), doctest::Contains("1 mod 8"), InputError);
  CHECK_THROWS_WITH_AS(total_L(15, ctx), doctest::Contains("not prime"), InputError);
  CHECK_THROWS_AS(total_L(11, ctx), InputError);
}

TEST_CASE("grid parameters") {
  CHECK(default_grid().min_parameter() == doctest::Approx(0.8));
  CHECK(shifted_grid().min_parameter() == doctest::Approx(10.0 / 13.0));
}
