#pragma once

// Arbitrary-precision real and complex arithmetic on top of MPFR.
//
// Every value carries its own precision; binary operations produce a result
// at the larger of the two operand precisions. There is no process-wide
// default precision, so values built from different contexts can be used
// concurrently from different threads.

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gross {

class Real {
 public:
  Real();
  explicit Real(mpfr_prec_t prec);
  Real(long value, mpfr_prec_t prec);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  /// Parses a decimal string ("1.25", "-3e-7", "6/5" is not accepted).
  static Real from_string(std::string_view text, mpfr_prec_t prec);
  /// num/den rounded once.
  static Real ratio(long num, long den, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator+=(long rhs);
  Real& operator-=(long rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Scientific notation with `significant` digits, round-to-nearest-even.
  std::string to_string(int significant) const;

 private:
  mpfr_t value_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator+(const Real& a, long b);
Real operator-(const Real& a, long b);
Real operator*(const Real& a, long b);
Real operator/(const Real& a, long b);
Real operator*(long a, const Real& b);
Real operator-(const Real& a);

bool operator<(const Real& a, const Real& b);
bool operator>(const Real& a, const Real& b);
bool operator<=(const Real& a, const Real& b);
bool operator>=(const Real& a, const Real& b);
bool operator==(const Real& a, const Real& b);
bool operator<(const Real& a, long b);
bool operator>(const Real& a, long b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real cbrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, long n);
Real pow(const Real& x, const Real& y);
Real round_nearest(const Real& x);
Real max(const Real& a, const Real& b);
/// a += x * y with a single rounding.
void fma_into(Real& acc, const Real& x, const Real& y);

struct Complex {
  Real re;
  Real im;

  Complex() = default;
  explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  mpfr_prec_t precision() const { return re.precision(); }

  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator*=(const Real& rhs);
  Complex& operator/=(const Complex& rhs);
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator*(const Complex& a, long b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Real& b);
Complex operator/(const Complex& a, long b);
Complex operator-(const Complex& a);

Complex conj(const Complex& z);
/// |z|^2
Real norm(const Complex& z);
Real abs(const Complex& z);
/// Argument in (-pi, pi].
Real arg(const Complex& z);
Complex polar(const Real& modulus, const Real& angle);
Complex pow(const Complex& z, long n);

/// out = x * y, reusing out's storage.
void mul_into(Complex& out, const Complex& x, const Complex& y);

/// Precision carrier shared by every module. Immutable after creation.
class PrecisionContext {
 public:
  int digits() const { return digits_; }
  int guard() const { return guard_; }
  int working_digits() const { return digits_ + guard_; }
  mpfr_prec_t bits() const { return bits_; }

  Real zero() const { return Real(0, bits_); }
  Real real(long v) const { return Real(v, bits_); }
  Real ratio(long num, long den) const { return Real::ratio(num, den, bits_); }
  Complex complex(long re, long im = 0) const { return {Real(re, bits_), Real(im, bits_)}; }
  /// 10^(-k)
  Real tolerance(int k) const;

  const Real& pi() const { return pi_; }
  const Real& half_log_two_pi() const { return half_log_two_pi_; }

  /// B_{2k} / (2k (2k-1)) for k = 1..K, enough terms for the Stirling tail
  /// at arguments >= stirling_threshold().
  const std::vector<Real>& stirling_coefficients() const { return stirling_; }
  long stirling_threshold() const { return stirling_threshold_; }

  /// exp(2 pi i k / n)
  Complex root_of_unity(long k, long n) const;

 private:
  friend PrecisionContext make_context(int digits);
  PrecisionContext() = default;

  int digits_ = 0;
  int guard_ = 0;
  mpfr_prec_t bits_ = 0;
  long stirling_threshold_ = 0;
  Real pi_;
  Real half_log_two_pi_;
  std::vector<Real> stirling_;
};

/// Context for `digits` decimal digits of output accuracy; working precision
/// is digits + max(10, digits / 10). Throws InvalidPrecision for digits < 10.
PrecisionContext make_context(int digits);

/// ln Gamma(x) for x > 0 via argument shifting and the Stirling series.
Real ln_gamma(const Real& x, const PrecisionContext& ctx);

/// k-th root of z with argument in (-pi/k, pi/k].
Complex principal_root(const Complex& z, long k, const PrecisionContext& ctx);

}  // namespace gross
