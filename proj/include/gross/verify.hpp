#pragma once

// Oracle checks run by `gross-sha verify`. Each check pairs a production
// computation with an independent route to the same quantity.

#include <cstdint>
#include <string>
#include <vector>

#include "gross/classgroup.hpp"
#include "gross/hecke.hpp"

namespace gross {

/// h(-q) = -(1/q) sum_{0<c<q} c (c|q), valid for primes q = 3 (mod 4), q > 3.
long class_number_formula(std::int64_t q);

/// sum over ideals I of norm n of psi(I) chi([I]); zero when q | n.
Complex coefficient_by_enumeration(const HeckeChar& psi, const ClassChar& chi, std::int64_t n);

struct CheckResult {
  std::string name;
  std::int64_t q = 0;
  bool passed = false;
  std::string detail;
};

struct VerifyConfig {
  std::vector<std::int64_t> qs{7, 23, 31, 47, 71};
  int digits = 32;
  /// Largest n compared in the coefficient oracle.
  std::int64_t oracle_cutoff = 1000;
  /// Test hook: perturb one multiplicative coefficient before comparing.
  bool corrupt_coefficients = false;
};

std::vector<CheckResult> run_verification(const VerifyConfig& config);

}  // namespace gross
