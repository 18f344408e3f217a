#pragma once

// Shared test helpers: a seeded generator for property tests and oracles
// written without calling into the library under test.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "gross/numerics.hpp"

namespace gross::test {

/// splitmix64; fixed seeds keep every property test reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

inline std::int64_t power_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
  __int128 r = 1;
  __int128 x = ((b % m) + m) % m;
  while (e > 0) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<std::int64_t>(r);
}

/// Legendre symbol by Euler's criterion, p an odd prime.
inline int legendre(std::int64_t a, std::int64_t p) {
  const std::int64_t r = power_mod(a, (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

inline bool trial_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Primes q = 7 (mod 8) up to `limit`, by trial division.
inline std::vector<std::int64_t> gross_primes(std::int64_t limit) {
  std::vector<std::int64_t> out;
  for (std::int64_t q = 7; q <= limit; q += 8) {
    if (trial_prime(q)) out.push_back(q);
  }
  return out;
}

/// Counts (a, b, c) with b^2 - 4ac = -q, |b| <= a <= c, b >= 0 on the
/// boundary, by scanning every a and b directly.
inline int brute_force_class_number(std::int64_t q) {
  int count = 0;
  for (std::int64_t a = 1; a * a <= q; ++a) {
    for (std::int64_t b = -a; b <= a; ++b) {
      const std::int64_t num = b * b + q;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if ((b == -a || a == c) && b < 0) continue;
      ++count;
    }
  }
  return count;
}

/// h = -(1/q) sum c (c|q) with Euler-criterion symbols.
inline long dirichlet_class_number(std::int64_t q) {
  long sum = 0;
  for (std::int64_t c = 1; c < q; ++c) sum += c * legendre(c, q);
  return -sum / q;
}

/// sum over all characters chi of a_n(psi chi) = h * sum over principal
/// ideals (alpha) of norm n of eps(alpha) alpha. Each ideal has the two
/// generators +-alpha with equal eps(alpha) alpha, hence the factor h/2.
inline Complex principal_theta(std::int64_t q, int h, std::int64_t n, const PrecisionContext& ctx) {
  Complex total = ctx.complex(0);
  if (n % q == 0) return total;
  const Real root_q = sqrt(ctx.real(q));
  const std::int64_t inv2 = (q + 1) / 2;
  for (std::int64_t v = 0; q * v * v <= 4 * n; ++v) {
    const std::int64_t rest = 4 * n - q * v * v;
    std::int64_t u = static_cast<std::int64_t>(std::sqrt(static_cast<double>(rest)));
    while (u * u > rest) --u;
    while ((u + 1) * (u + 1) <= rest) ++u;
    if (u * u != rest) continue;
    for (int su : {1, -1}) {
      for (int sv : {1, -1}) {
        if (u == 0 && su < 0) continue;
        if (v == 0 && sv < 0) continue;
        const std::int64_t uu = su * u;
        const std::int64_t vv = sv * v;
        const int eps = legendre(((uu % q + q) % q) * inv2 % q, q);
        Complex alpha{ctx.ratio(uu, 2), root_q * vv / 2};
        total += alpha * static_cast<long>(eps);
      }
    }
  }
  return total * static_cast<long>(h) / 2;
}

/// Fourier coefficients of the conductor-49 CM curve y^2 + xy = x^3 - x^2 - 2x - 1,
/// from point counts (see tests/oracles/reference_values.py).
inline const std::vector<int>& conductor49_coefficients() {
  static const std::vector<int> a{0, 1, 1, 0, -1, 0, 0, 0, -3, -3, 0, 4, 0, 0, 0, 0, -1, 0, -3, 0, 0};
  return a;
}

// Values frozen from tests/oracles/reference_values.py (mpmath, 50 digits).
inline constexpr const char* kL49 = "0.9666558528084057733665384195149068655251";
inline constexpr const char* kG7 = "11.01719287585816788274346226218078489314";
inline constexpr const char* kG23 = "4972.31615674656270186703606318366085129";
inline constexpr const char* kG71 = "5261468176.664831367726388175421329577749";
inline constexpr const char* kJ23 = "-3493225.699969933368205504738547329703396";
inline constexpr const char* kJ71 = "-313645819574.2222701273140878636976013771";

inline Real parse(const char* text, const PrecisionContext& ctx) {
  return Real::from_string(text, ctx.bits());
}

inline Real relative_gap(const Real& a, const Real& b) { return abs(a - b) / abs(b); }

}  // namespace gross::test

#ifdef DOCTEST_LIBRARY_INCLUDED
namespace doctest {
template <>
struct StringMaker<gross::Real> {
  static String convert(const gross::Real& x) { return x.to_string(6).c_str(); }
};
}  // namespace doctest
#endif
