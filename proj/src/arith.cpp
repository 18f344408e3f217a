#include "gross/arith.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "gross/errors.hpp"

namespace gross {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

bool miller_rabin_round(u64 n, u64 a, u64 d, int s) {
  u64 x = pow_mod(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  std::mt19937_64 rng(n);
  for (;;) {
    const u64 c = rng() % (n - 1) + 1;
    u64 y = rng() % n;
    u64 g = 1;
    u64 r = 1;
    u64 q = 1;
    u64 x = 0;
    u64 ys = 0;
    const u64 m = 128;
    auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(u64 n, std::map<u64, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const u64 d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

// Solutions x mod p^k of x^2 = a.
std::vector<std::int64_t> sqrt_mod_prime_power(std::int64_t a, std::int64_t p, int k,
                                               std::int64_t q) {
  std::int64_t pk = 1;
  for (int i = 0; i < k; ++i) pk *= p;
  std::vector<std::int64_t> sols;

  if (p == 2) {
    const int base_exp = std::min(k, 3);
    const std::int64_t base = std::int64_t{1} << base_exp;
    for (std::int64_t x = 0; x < base; ++x) {
      if (mod(x * x - a, base) == 0) sols.push_back(x);
    }
    std::int64_t m = base;
    for (int e = base_exp; e < k; ++e) {
      const std::int64_t next = m * 2;
      std::vector<std::int64_t> lifted;
      for (std::int64_t s : sols) {
        for (std::int64_t cand : {s, s + m}) {
          if (mod(static_cast<std::int64_t>(static_cast<i128>(cand) * cand % next) - a, next) ==
              0) {
            lifted.push_back(cand);
          }
        }
      }
      std::sort(lifted.begin(), lifted.end());
      lifted.erase(std::unique(lifted.begin(), lifted.end()), lifted.end());
      sols = std::move(lifted);
      m = next;
    }
    return sols;
  }

  if (p == q) {
    // x^2 = -q (mod q^k): x = 0 for k = 1, no solution beyond.
    if (k == 1) sols.push_back(0);
    return sols;
  }

  const std::int64_t ap = mod(a, p);
  if (ap == 0) throw InputError("sqrt_neg_q_mod: modulus shares a factor with q");
  if (jacobi(ap, p) != 1) return sols;
  std::int64_t r = static_cast<std::int64_t>(sqrt_mod_prime(static_cast<u64>(ap), static_cast<u64>(p)));
  std::int64_t m = p;
  for (int e = 1; e < k; ++e) {
    const std::int64_t next = m * p;
    const std::int64_t f = mod(static_cast<std::int64_t>(static_cast<i128>(r) * r % next) - a, next);
    const std::int64_t inv = inv_mod(mod(2 * r, next), next);
    r = mod(r - static_cast<std::int64_t>(static_cast<i128>(f) * inv % next), next);
    m = next;
  }
  sols.push_back(r);
  if (pk - r != r) sols.push_back(pk - r);
  std::sort(sols.begin(), sols.end());
  return sols;
}

}  // namespace

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod(a, m);
  std::int64_t r = m;
  std::int64_t old_s = 1;
  std::int64_t s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - quot * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - quot * s);
  }
  if (old_r != 1) throw DomainError("inv_mod: not invertible");
  return mod(old_s, m);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // This base set is a proven witness set for all n < 2^64.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (!miller_rabin_round(n, a, d, s)) return false;
  }
  return true;
}

int jacobi(std::int64_t a, std::int64_t n) {
  if (n < 1 || n % 2 == 0) throw DomainError("jacobi: n must be odd and positive");
  a = mod(a, n);
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

Factorization factorize(u64 n) {
  if (n == 0) throw DomainError("factorize(0)");
  std::map<u64, int> found;
  for (u64 p = 2; p <= 1000000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++found[p];
      n /= p;
    }
  }
  factor_into(n, found);
  Factorization out;
  out.reserve(found.size());
  for (const auto& [p, e] : found) out.push_back({p, e});
  return out;
}

u64 sqrt_mod_prime(u64 a, u64 p) {
  a %= p;
  if (p == 2 || a == 0) return a;
  if (pow_mod(a, (p - 1) / 2, p) != 1) throw DomainError("sqrt_mod_prime: non-residue");
  if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
  u64 q = p - 1;
  int s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  u64 z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  u64 m = static_cast<u64>(s);
  u64 c = pow_mod(z, q, p);
  u64 t = pow_mod(a, q, p);
  u64 r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0;
    u64 t2 = t;
    while (t2 != 1) {
      t2 = mul_mod(t2, t2, p);
      ++i;
    }
    u64 b = c;
    for (u64 j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  return r;
}

std::vector<std::int64_t> sqrt_neg_q_mod(std::int64_t q, std::int64_t n) {
  if (n < 1) throw DomainError("sqrt_neg_q_mod: n must be positive");
  const std::int64_t g = std::gcd(n, q);
  if (g != 1 && g != q) throw InputError("sqrt_neg_q_mod: gcd(n, q) must be 1 or q");

  const std::int64_t modulus = 4 * n;
  const std::int64_t target = -q;
  std::vector<std::int64_t> residues{0};
  std::int64_t built = 1;
  for (const PrimePower& pp : factorize(static_cast<u64>(modulus))) {
    const auto p = static_cast<std::int64_t>(pp.prime);
    auto local = sqrt_mod_prime_power(target, p, pp.exponent, q);
    if (local.empty()) return {};
    std::int64_t pk = 1;
    for (int i = 0; i < pp.exponent; ++i) pk *= p;
    const std::int64_t inv = built == 1 ? 0 : inv_mod(built % pk, pk);
    std::vector<std::int64_t> merged;
    for (std::int64_t r1 : residues) {
      for (std::int64_t r2 : local) {
        if (built == 1) {
          merged.push_back(r2);
          continue;
        }
        const std::int64_t t = static_cast<std::int64_t>(static_cast<i128>(mod(r2 - r1, pk)) * inv % pk);
        merged.push_back(r1 + built * t);
      }
    }
    residues = std::move(merged);
    built *= pk;
  }
  std::vector<std::int64_t> out;
  for (std::int64_t r : residues) out.push_back(r % (2 * n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t limit) {
  std::vector<std::uint32_t> spf(static_cast<std::size_t>(limit) + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (spf[i] == 0) {
      spf[i] = i;
      primes.push_back(i);
    }
    for (std::uint32_t p : primes) {
      const std::uint64_t v = static_cast<std::uint64_t>(p) * i;
      if (p > spf[i] || v > limit) break;
      spf[v] = p;
    }
  }
  return spf;
}

}  // namespace gross
