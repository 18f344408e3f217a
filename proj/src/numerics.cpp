#include "gross/numerics.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "gross/errors.hpp"

namespace gross {

namespace {

constexpr mpfr_prec_t kDefaultBits = 64;

mpfr_prec_t joint(const Real& a, const Real& b) {
  return std::max(a.precision(), b.precision());
}

mpfr_prec_t digits_to_bits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873623)) + 8;
}

// Even-index Bernoulli numbers B_0, B_2, ..., B_{2n} from the
// recurrence sum_{j<=m} C(m+1, j) B_j = 0.
std::vector<mpq_class> bernoulli_even(int n) {
  const int top = 2 * n;
  std::vector<mpq_class> b(top + 1);
  b[0] = 1;
  for (int m = 1; m <= top; ++m) {
    mpq_class acc = 0;
    mpz_class binom = 1;  // C(m+1, 0)
    for (int j = 0; j < m; ++j) {
      acc += mpq_class(binom) * b[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b[m] = -acc / mpq_class(m + 1);
    b[m].canonicalize();
  }
  std::vector<mpq_class> even(n + 1);
  for (int k = 0; k <= n; ++k) even[k] = b[2 * k];
  return even;
}

}  // namespace

// ---------------------------------------------------------------- Real

Real::Real() : Real(kDefaultBits) {}

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  value_[0] = other.value_[0];
  other.value_[0]._mpfr_d = nullptr;
}

Real& Real::operator=(const Real& other) {
  if (this == &other) return *this;
  if (value_[0]._mpfr_d == nullptr) {
    mpfr_init2(value_, other.precision());
  } else if (precision() != other.precision()) {
    mpfr_set_prec(value_, other.precision());
  }
  mpfr_set(value_, other.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this == &other) return *this;
  if (value_[0]._mpfr_d != nullptr) mpfr_clear(value_);
  value_[0] = other.value_[0];
  other.value_[0]._mpfr_d = nullptr;
  return *this;
}

Real::~Real() {
  if (value_[0]._mpfr_d != nullptr) mpfr_clear(value_);
}

Real Real::from_string(std::string_view text, mpfr_prec_t prec) {
  Real r(prec);
  std::string s(text);
  if (mpfr_set_str(r.value_, s.c_str(), 10, MPFR_RNDN) != 0 && !mpfr_number_p(r.value_)) {
    throw InputError("not a decimal number: " + s);
  }
  return r;
}

Real Real::ratio(long num, long den, mpfr_prec_t prec) {
  if (den == 0) throw DomainError("ratio with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  Real r(prec);
  mpfr_set_q(r.value_, q.get_mpq_t(), MPFR_RNDN);
  return r;
}

std::string Real::to_string(int significant) const {
  if (significant < 1) significant = 1;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", significant - 1, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

Real& Real::operator+=(const Real& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& rhs) {
  if (rhs.precision() > precision()) mpfr_prec_round(value_, rhs.precision(), MPFR_RNDN);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator+=(long rhs) {
  mpfr_add_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(long rhs) {
  mpfr_sub_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real operator+(const Real& a, const Real& b) {
  Real r(joint(a, b));
  mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r(joint(a, b));
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r(joint(a, b));
  mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r(joint(a, b));
  mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
Real operator+(const Real& a, long b) {
  Real r(a);
  return r += b;
}
Real operator-(const Real& a, long b) {
  Real r(a);
  return r -= b;
}
Real operator*(const Real& a, long b) {
  Real r(a);
  return r *= b;
}
Real operator/(const Real& a, long b) {
  Real r(a);
  return r /= b;
}
Real operator*(long a, const Real& b) { return b * a; }
Real operator-(const Real& a) {
  Real r(a.precision());
  mpfr_neg(r.get(), a.get(), MPFR_RNDN);
  return r;
}

bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
bool operator>=(const Real& a, const Real& b) {
  return mpfr_greaterequal_p(a.get(), b.get()) != 0;
}
bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }
bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.get(), b) < 0; }
bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.get(), b) > 0; }

#define GROSS_UNARY(name, fn)               \
  Real name(const Real& x) {                \
    Real r(x.precision());                  \
    fn(r.get(), x.get(), MPFR_RNDN);        \
    return r;                               \
  }

GROSS_UNARY(abs, mpfr_abs)
GROSS_UNARY(sqrt, mpfr_sqrt)
GROSS_UNARY(cbrt, mpfr_cbrt)
GROSS_UNARY(exp, mpfr_exp)
GROSS_UNARY(log, mpfr_log)
GROSS_UNARY(sin, mpfr_sin)
GROSS_UNARY(cos, mpfr_cos)

#undef GROSS_UNARY

Real atan2(const Real& y, const Real& x) {
  Real r(joint(y, x));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  Real r(x.precision());
  mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r(joint(x, y));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real round_nearest(const Real& x) {
  Real r(x.precision());
  mpfr_rint(r.get(), x.get(), MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

void fma_into(Real& acc, const Real& x, const Real& y) {
  mpfr_fma(acc.get(), x.get(), y.get(), acc.get(), MPFR_RNDN);
}

// ------------------------------------------------------------- Complex

Complex& Complex::operator+=(const Complex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}
Complex& Complex::operator-=(const Complex& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}
Complex& Complex::operator*=(const Complex& rhs) {
  Complex out(std::max(precision(), rhs.precision()));
  mul_into(out, *this, rhs);
  *this = std::move(out);
  return *this;
}
Complex& Complex::operator*=(const Real& rhs) {
  re *= rhs;
  im *= rhs;
  return *this;
}
Complex& Complex::operator/=(const Complex& rhs) {
  *this = *this / rhs;
  return *this;
}

void mul_into(Complex& out, const Complex& x, const Complex& y) {
  // re = x.re*y.re - x.im*y.im, im = x.re*y.im + x.im*y.re
  mpfr_fmms(out.re.get(), x.re.get(), y.re.get(), x.im.get(), y.im.get(), MPFR_RNDN);
  mpfr_fmma(out.im.get(), x.re.get(), y.im.get(), x.im.get(), y.re.get(), MPFR_RNDN);
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) {
  Complex out(std::max(a.precision(), b.precision()));
  mul_into(out, a, b);
  return out;
}
Complex operator*(const Complex& a, const Real& b) { return {a.re * b, a.im * b}; }
Complex operator*(const Complex& a, long b) { return {a.re * b, a.im * b}; }
Complex operator/(const Complex& a, const Complex& b) {
  const Real den = norm(b);
  Complex num = a * conj(b);
  return {num.re / den, num.im / den};
}
Complex operator/(const Complex& a, const Real& b) { return {a.re / b, a.im / b}; }
Complex operator/(const Complex& a, long b) { return {a.re / b, a.im / b}; }
Complex operator-(const Complex& a) { return {-a.re, -a.im}; }

Complex conj(const Complex& z) { return {z.re, -z.im}; }

Real norm(const Complex& z) {
  Real r(z.precision());
  mpfr_fmma(r.get(), z.re.get(), z.re.get(), z.im.get(), z.im.get(), MPFR_RNDN);
  return r;
}

Real abs(const Complex& z) {
  Real r(z.precision());
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

Real arg(const Complex& z) {
  Real a = atan2(z.im, z.re);
  // atan2 returns -pi for (negative, -0); fold onto the (-pi, pi] branch.
  if (z.im.is_zero() && z.re.sign() < 0 && a.sign() < 0) a = -a;
  return a;
}

Complex polar(const Real& modulus, const Real& angle) {
  Real s(angle.precision());
  Real c(angle.precision());
  mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
  return {modulus * c, modulus * s};
}

Complex pow(const Complex& z, long n) {
  if (n < 0) {
    Complex one{Real(1, z.precision()), Real(0, z.precision())};
    return one / pow(z, -n);
  }
  Complex result{Real(1, z.precision()), Real(0, z.precision())};
  Complex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

// ---------------------------------------------------- PrecisionContext

Real PrecisionContext::tolerance(int k) const {
  Real t(10, bits_);
  mpfr_pow_si(t.get(), t.get(), -k, MPFR_RNDN);
  return t;
}

Complex PrecisionContext::root_of_unity(long k, long n) const {
  if (n <= 0) throw DomainError("root of unity order must be positive");
  k %= n;
  if (k < 0) k += n;
  if (k == 0) return complex(1);
  if (2 * k == n) return complex(-1);
  Real angle = pi_ * (2 * k);
  angle /= n;
  return polar(real(1), angle);
}

PrecisionContext make_context(int digits) {
  if (digits < 10) {
    throw InvalidPrecision("digits must be >= 10, got " + std::to_string(digits));
  }
  PrecisionContext ctx;
  ctx.digits_ = digits;
  ctx.guard_ = std::max(10, digits / 10);
  ctx.bits_ = digits_to_bits(ctx.working_digits());

  ctx.pi_ = Real(ctx.bits_);
  mpfr_const_pi(ctx.pi_.get(), MPFR_RNDN);
  ctx.half_log_two_pi_ = log(ctx.pi_ * 2) / 2;

  // Stirling tail: shift arguments to at least X, then add terms until the
  // next coefficient / X^(2k-1) falls below 10^-(working digits + 2).
  const int wd = ctx.working_digits();
  ctx.stirling_threshold_ = static_cast<long>(std::ceil(0.75 * wd)) + 5;
  const Real target = ctx.tolerance(wd + 2);
  const Real threshold(ctx.stirling_threshold_, ctx.bits_);

  int n = 8;
  for (;;) {
    auto b = bernoulli_even(n);
    ctx.stirling_.clear();
    bool converged = false;
    for (int k = 1; k <= n; ++k) {
      Real c(ctx.bits_);
      mpfr_set_q(c.get(), b[k].get_mpq_t(), MPFR_RNDN);
      c /= static_cast<long>(2 * k) * (2 * k - 1);
      Real term = abs(c) / pow(threshold, 2 * k - 1);
      ctx.stirling_.push_back(std::move(c));
      if (term < target) {
        converged = true;
        break;
      }
    }
    if (converged) break;
    n *= 2;
  }
  return ctx;
}

Real ln_gamma(const Real& x_in, const PrecisionContext& ctx) {
  if (x_in.sign() <= 0) throw DomainError("ln_gamma needs x > 0");
  Real x(ctx.bits());
  mpfr_set(x.get(), x_in.get(), MPFR_RNDN);

  Real shift = ctx.real(1);
  const long threshold = ctx.stirling_threshold();
  bool shifted = false;
  while (x < threshold) {
    shift *= x;
    x += 1;
    shifted = true;
  }

  Real result = (x - ctx.ratio(1, 2)) * log(x) - x + ctx.half_log_two_pi();
  const Real inv = ctx.real(1) / x;
  const Real inv2 = inv * inv;
  Real power = inv;
  for (const Real& c : ctx.stirling_coefficients()) {
    fma_into(result, c, power);
    power *= inv2;
  }
  if (shifted) result -= log(shift);
  return result;
}

Complex principal_root(const Complex& z, long k, const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("root index must be positive");
  if (k == 1) return z;
  if (z.re.is_zero() && z.im.is_zero()) throw DomainError("principal_root of zero");
  Real modulus(ctx.bits());
  mpfr_rootn_ui(modulus.get(), abs(z).get(), static_cast<unsigned long>(k), MPFR_RNDN);
  Real angle = arg(z) / k;
  return polar(modulus, angle);
}

}  // namespace gross
