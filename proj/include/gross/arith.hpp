#pragma once

// Exact integer arithmetic: primality, factorization, quadratic symbols and
// modular square roots of -q used for ideal enumeration.

#include <cstdint>
#include <utility>
#include <vector>

namespace gross {

struct PrimePower {
  std::uint64_t prime;
  int exponent;

  bool operator==(const PrimePower&) const = default;
};

/// Primes strictly increasing; the product of prime^exponent is the input.
using Factorization = std::vector<PrimePower>;

/// Deterministic for every n < 2^64.
bool is_prime(std::uint64_t n);

/// Jacobi symbol (a|n) for odd n >= 1.
int jacobi(std::int64_t a, std::int64_t n);

Factorization factorize(std::uint64_t n);

/// All b in [0, 2n) with b^2 = -q (mod 4n), ascending.
std::vector<std::int64_t> sqrt_neg_q_mod(std::int64_t q, std::int64_t n);

// Helpers shared with the other modules.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
/// Inverse of a modulo m (gcd(a, m) = 1), in [0, m).
std::int64_t inv_mod(std::int64_t a, std::int64_t m);
/// Non-negative residue of a mod m (m > 0).
std::int64_t mod(std::int64_t a, std::int64_t m);
/// Square root of a modulo an odd prime p with (a|p) = 1 (Tonelli-Shanks).
std::uint64_t sqrt_mod_prime(std::uint64_t a, std::uint64_t p);

/// Smallest prime factor table for 0..limit (entries 0 and 1 are 0).
std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t limit);

}  // namespace gross
