#pragma once

// Central values L(psi chi, 1) from exponentially smoothed Dirichlet series.
//
// For the weight-2, level-q^2 data attached to psi chi,
//   L(1) = S(t) + w T(1/t),  S(t) = sum a_n/n exp(-2 pi n t / q),
// with T the same sum over conj(a_n) and w the root number. Two values of t
// determine w; a third one measures the consistency of the solve.

#include <cstdint>
#include <vector>

#include "gross/hecke.hpp"
#include "gross/numerics.hpp"

namespace gross {

struct Rational {
  long num = 1;
  long den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  Real to_real(const PrecisionContext& ctx) const { return ctx.ratio(num, den); }
};

/// Smoothing parameters: t0, t1 solve for (L, w); t2 checks the solution.
struct TGrid {
  Rational t0{1, 1};
  Rational t1{6, 5};
  Rational t2{4, 5};

  /// Smallest value among t_i and 1/t_i; it governs the series length.
  double min_parameter() const;
};

TGrid default_grid();
/// Fallback grid used when the default one is root-number unstable.
TGrid shifted_grid();

/// Smallest M with sum_{n>M} n exp(-2 pi n t / q) < 10^(-digits-2).
std::int64_t truncation(std::int64_t q, int digits, double t);

/// S(t) over the whole series; throws InputError when the series is shorter
/// than truncation(q, digits, t).
Complex smoothed_sum(const CoeffSeries& a, const Rational& t, std::int64_t q,
                     const PrecisionContext& ctx);

/// Precomputed exp(-2 pi n t / q) / n for every t and 1/t of a grid.
class SmoothingKernel {
 public:
  SmoothingKernel(std::int64_t q, const PrecisionContext& ctx, const TGrid& grid = default_grid(),
                  int margin_digits = 0);

  std::int64_t q() const { return q_; }
  std::int64_t cutoff() const { return cutoff_; }
  const TGrid& grid() const { return grid_; }
  const PrecisionContext& context() const { return ctx_; }

  /// sum a_n w_n for weight set `slot` (0..2: t_i, 3..5: 1/t_i).
  Complex apply(const CoeffSeries& a, int slot) const;

 private:
  std::int64_t q_;
  std::int64_t cutoff_;
  TGrid grid_;
  PrecisionContext ctx_;
  std::vector<std::vector<Real>> weights_;
};

struct CentralValue {
  Complex L;
  Complex w;
  Real residual;
  std::int64_t cutoff = 0;
  bool nonzero = true;
  TGrid grid;
};

CentralValue central_value(const CoeffSeries& a, const SmoothingKernel& kernel);
CentralValue central_value(const CoeffSeries& a, std::int64_t q, const PrecisionContext& ctx,
                           const TGrid& grid = default_grid());

struct TotalLOptions {
  TGrid grid = default_grid();
  /// Optional shift of the psi(g_i) root choices (see build_psi).
  std::vector<int> branch;
  int margin_digits = 0;
  /// Worker threads for the per-character central values.
  int jobs = 1;
};

struct TotalL {
  std::int64_t q = 0;
  int h = 0;
  std::vector<int> invariants;
  std::vector<CentralValue> factors;
  /// prod_chi |L(psi chi, 1)|^2
  Real L_total;
};

/// Throws InputError unless q is prime with q = 7 (mod 8).
void require_gross_prime(std::int64_t q);

TotalL total_L(std::int64_t q, const PrecisionContext& ctx, const TotalLOptions& options = {});
TotalL total_L(std::int64_t q, int digits, const TotalLOptions& options = {});

}  // namespace gross
