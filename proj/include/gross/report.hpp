#pragma once

// Analytic order of Sha(E/H) from the conjectural formula
//   #Sha = q^{3h/2} L(E/H, 1) / (2^{3h-4} pi^h prod_{0<c<q} Gamma(c/q)^{(c|q)}),
// packaged with integrality and squareness checks.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gross/curve.hpp"
#include "gross/lfun.hpp"
#include "gross/numerics.hpp"

namespace gross {

struct CharacterSummary {
  Real abs_L;
  Complex w;
  Real residual;
};

struct ShaReport {
  std::int64_t q = 0;
  int h = 0;
  std::vector<int> invariants;
  int digits = 0;

  Real L_total;
  Real G;
  Real sha_real;
  mpz_class sha_round;
  /// |sha_real - sha_round|
  Real residual;
  bool is_square = false;
  std::optional<mpz_class> sha_sqrt;
  /// residual < 10^(-digits/2); unverified records are never silently rounded.
  bool verified = false;
  /// Recorded, not asserted.
  bool sha_odd = false;

  /// max over chi of ||w_chi| - 1|
  Real max_w_dev;
  Real max_chi_residual;
  std::vector<CharacterSummary> characters;
  bool all_nonzero = true;

  /// Relative agreement of q^h q^{(h-1)/2} sqrt(q) with exp((3h/2) ln q).
  Real power_check;

  Real j;
  Real m;
  Real n;

  double runtime_ms = 0;
};

struct ShaOptions {
  TotalLOptions lfun;
};

std::pair<bool, std::optional<mpz_class>> is_perfect_square(const mpz_class& n);

/// Never throws for a large residual: the record comes back with
/// verified = false. Use require_verified to turn that into an error.
ShaReport sha_order(std::int64_t q, int digits, const ShaOptions& options = {});

/// Throws PrecisionExhausted when the report is not verified.
void require_verified(const ShaReport& report);

}  // namespace gross
