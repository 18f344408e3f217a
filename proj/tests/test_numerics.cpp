#include <mpfr.h>

#include "doctest.h"
#include "gross/errors.hpp"
#include "gross/numerics.hpp"
#include "support.hpp"

using namespace gross;
using gross::test::Rng;

namespace {

// Gamma through MPFR's own lngamma, independent of the Stirling code.
Real mpfr_ln_gamma(const Real& x) {
  Real out(x.precision());
  mpfr_lngamma(out.get(), x.get(), MPFR_RNDN);
  return out;
}

}  // namespace

TEST_CASE("context rejects fewer than ten digits") {
  CHECK_THROWS_AS(make_context(9), InvalidPrecision);
  CHECK_THROWS_AS(make_context(-1), InvalidPrecision);
  const PrecisionContext ctx = make_context(10);
  CHECK(ctx.guard() == 10);
  CHECK(ctx.working_digits() == 20);
}

TEST_CASE("guard digits grow with precision") {
  const PrecisionContext ctx = make_context(200);
  CHECK(ctx.guard() == 20);
  CHECK(ctx.bits() >= 220 * 3.3219);
}

TEST_CASE("tolerance is a power of ten") {
  const PrecisionContext ctx = make_context(32);
  const Real t = ctx.tolerance(7);
  CHECK(abs(t * 10000000L - 1) < ctx.tolerance(35));
}

TEST_CASE("ln_gamma special values") {
  const PrecisionContext ctx = make_context(40);
  CHECK(abs(ln_gamma(ctx.real(1), ctx)) < ctx.tolerance(45));
  CHECK(abs(ln_gamma(ctx.real(2), ctx)) < ctx.tolerance(45));
  const Real half = ln_gamma(ctx.ratio(1, 2), ctx);
  CHECK(abs(half - log(sqrt(ctx.pi()))) < ctx.tolerance(42));
  CHECK(abs(ln_gamma(ctx.real(11), ctx) - log(ctx.real(3628800))) < ctx.tolerance(40));
}

TEST_CASE("ln_gamma rejects non-positive arguments") {
  const PrecisionContext ctx = make_context(20);
  CHECK_THROWS_AS(ln_gamma(ctx.real(0), ctx), DomainError);
  CHECK_THROWS_AS(ln_gamma(ctx.real(-3), ctx), DomainError);
}

TEST_CASE("ln_gamma agrees with MPFR on random arguments") {
  const PrecisionContext ctx = make_context(32);
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Real x = ctx.ratio(static_cast<long>(rng.uniform(1, 60'000'000)), 1'000'000);
    CHECK(abs(ln_gamma(x, ctx) - mpfr_ln_gamma(x)) < ctx.tolerance(34));
  }
}

TEST_CASE("ln_gamma recurrence") {
  const PrecisionContext ctx = make_context(32);
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const Real x = ctx.ratio(static_cast<long>(rng.uniform(1, 50'000'000)), 1'000'000);
    const Real lhs = ln_gamma(x + 1, ctx) - ln_gamma(x, ctx);
    CHECK(abs(lhs - log(x)) < ctx.tolerance(33));
  }
}

TEST_CASE("ln_gamma reflection") {
  const PrecisionContext ctx = make_context(32);
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    const Real x = ctx.ratio(static_cast<long>(rng.uniform(1, 999'999)), 1'000'000);
    const Real lhs = ln_gamma(x, ctx) + ln_gamma(ctx.real(1) - x, ctx);
    const Real rhs = log(ctx.pi() / sin(ctx.pi() * x));
    CHECK(abs(lhs - rhs) < ctx.tolerance(33));
  }
}

TEST_CASE("ln_gamma is stable across precisions") {
  const PrecisionContext lo = make_context(32);
  const PrecisionContext hi = make_context(64);
  for (long c = 1; c < 23; ++c) {
    const Real a = ln_gamma(lo.ratio(c, 23), lo);
    const Real b = ln_gamma(hi.ratio(c, 23), hi);
    CHECK(abs(a - b) < hi.tolerance(32));
  }
}

TEST_CASE("principal roots") {
  const PrecisionContext ctx = make_context(32);
  Rng rng(14);
  for (int i = 0; i < 100; ++i) {
    const Complex z{ctx.real(static_cast<long>(rng.uniform(-1000, 1000))),
                    ctx.real(static_cast<long>(rng.uniform(-1000, 1000)))};
    if (abs(z) < ctx.tolerance(5)) continue;
    const long k = static_cast<long>(rng.uniform(1, 9));
    const Complex r = principal_root(z, k, ctx);
    CHECK(abs(pow(r, k) - z) / abs(z) < ctx.tolerance(35));
    const Real a = arg(r);
    CHECK(a > -(ctx.pi() / k));
    CHECK(a <= ctx.pi() / k + ctx.tolerance(40));
  }
  CHECK_THROWS_AS(principal_root(ctx.complex(0), 3, ctx), DomainError);
}

TEST_CASE("principal root of a negative real is in the upper half plane") {
  const PrecisionContext ctx = make_context(20);
  const Complex r = principal_root(ctx.complex(-8), 3, ctx);
  CHECK(abs(r.re - 1) < ctx.tolerance(25));
  CHECK(abs(r.im - sqrt(ctx.real(3))) < ctx.tolerance(25));
}

TEST_CASE("roots of unity") {
  const PrecisionContext ctx = make_context(32);
  for (long n = 1; n <= 12; ++n) {
    for (long k = 0; k < n; ++k) {
      CHECK(abs(pow(ctx.root_of_unity(k, n), n) - ctx.complex(1)) < ctx.tolerance(36));
    }
  }
  CHECK(abs(ctx.root_of_unity(1, 4) - ctx.complex(0, 1)) < ctx.tolerance(40));
}

TEST_CASE("complex field identities on random values") {
  const PrecisionContext ctx = make_context(32);
  Rng rng(15);
  auto draw = [&] {
    return Complex{ctx.ratio(static_cast<long>(rng.uniform(-10000, 10000)), 97),
                   ctx.ratio(static_cast<long>(rng.uniform(-10000, 10000)), 89)};
  };
  for (int i = 0; i < 100; ++i) {
    const Complex a = draw();
    const Complex b = draw();
    if (abs(b) < ctx.tolerance(3)) continue;
    CHECK(abs((a * b) / b - a) < ctx.tolerance(36));
    CHECK(abs(norm(a) - (a * conj(a)).re) < ctx.tolerance(33));
    CHECK(abs(polar(abs(a), arg(a)) - a) < ctx.tolerance(36));
    Complex out(ctx.bits());
    mul_into(out, a, b);
    CHECK(abs(out - a * b) < ctx.tolerance(36));
  }
}

TEST_CASE("arg folds -pi to pi") {
  const PrecisionContext ctx = make_context(20);
  const Complex z{ctx.real(-1), -ctx.zero()};
  CHECK(abs(arg(z) - ctx.pi()) < ctx.tolerance(25));
}

TEST_CASE("formatting rounds half to even") {
  CHECK(Real::from_string("0.125", 64).to_string(2) == "1.2e-01");
  CHECK(Real::from_string("0.375", 64).to_string(2) == "3.8e-01");
  CHECK(Real(-3375, 64).to_string(4) == "-3.375e+03");
}

TEST_CASE("mixed-precision operations keep the larger precision") {
  const Real a(1, 64);
  const Real b(1, 256);
  CHECK((a + b).precision() == 256);
  CHECK((b * a).precision() == 256);
}

TEST_CASE("Stirling coefficients start at B2/2 and B4/12") {
  const PrecisionContext ctx = make_context(32);
  const auto& c = ctx.stirling_coefficients();
  REQUIRE(c.size() >= 2);
  CHECK(abs(c[0] - ctx.ratio(1, 12)) < ctx.tolerance(40));
  CHECK(abs(c[1] + ctx.ratio(1, 360)) < ctx.tolerance(40));
}
