#include "gross/ideal.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "gross/arith.hpp"
#include "gross/errors.hpp"

namespace gross {

namespace {

using i128 = __int128;

struct Vec {
  i128 x;
  i128 y;
};

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw ResourceError("ideal coefficient exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

// (x1 + y1 w)(x2 + y2 w) with w^2 = w - k, k = (1 + q)/4.
Vec multiply(const Vec& a, const Vec& b, std::int64_t q) {
  const i128 k = (1 + q) / 4;
  return {a.x * b.x - k * a.y * b.y, a.x * b.y + a.y * b.x + a.y * b.y};
}

Vec coords(const Element& e) { return {(static_cast<i128>(e.u) - e.v) / 2, e.v}; }

std::int64_t isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<i128>(r) * r > n) --r;
  while (static_cast<i128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

std::int64_t Element::norm(std::int64_t q) const {
  const i128 n = static_cast<i128>(u) * u + static_cast<i128>(q) * v * v;
  return narrow(n / 4);
}

Element Element::times(const Element& o, std::int64_t q) const {
  const i128 nu = static_cast<i128>(u) * o.u - static_cast<i128>(q) * v * o.v;
  const i128 nv = static_cast<i128>(u) * o.v + static_cast<i128>(o.u) * v;
  return {narrow(nu / 2), narrow(nv / 2)};
}

class IdealBuilder {
 public:
  // Hermite normal form of the Z-span of `gens`.
  static Ideal span(std::int64_t q, const std::vector<Vec>& gens) {
    bool have_pivot = false;
    Vec pivot{0, 0};
    i128 a = 0;
    for (const Vec& g : gens) {
      if (!have_pivot) {
        if (g.y != 0) {
          pivot = g;
          have_pivot = true;
        } else {
          a = gcd128(a, g.x);
        }
        continue;
      }
      i128 x0 = pivot.x, y0 = pivot.y, x1 = g.x, y1 = g.y;
      while (y1 != 0) {
        const i128 t = y0 / y1;
        const i128 nx = x0 - t * x1;
        const i128 ny = y0 - t * y1;
        x0 = x1;
        y0 = y1;
        x1 = nx;
        y1 = ny;
      }
      pivot = {x0, y0};
      a = gcd128(a, x1);
      if (a != 0) pivot.x %= a;
    }
    if (!have_pivot || a == 0) throw InternalError("ideal lattice is not of full rank");
    if (pivot.y < 0) pivot = {-pivot.x, -pivot.y};
    i128 b = pivot.x % a;
    if (b < 0) b += a;
    return Ideal(q, narrow(a), narrow(b), narrow(pivot.y));
  }

  static std::vector<Vec> basis(const Ideal& I) {
    return {{I.a_, 0}, {I.b_, I.c_}};
  }
};

Ideal Ideal::unit(std::int64_t q) { return Ideal(q, 1, 0, 1); }

Ideal Ideal::primitive(std::int64_t a, std::int64_t b, std::int64_t q) {
  if (a < 1) throw InputError("ideal norm must be positive");
  if (mod(b * b + q, 4 * a) != 0) throw InputError("b^2 != -q (mod 4a)");
  // (b + sqrt(-q))/2 = (b - 1)/2 + w
  return IdealBuilder::span(q, {{a, 0}, {(static_cast<i128>(b) - 1) / 2, 1}});
}

Ideal Ideal::principal(const Element& alpha, std::int64_t q) {
  const Vec a = coords(alpha);
  return IdealBuilder::span(q, {a, multiply(a, {0, 1}, q)});
}

std::int64_t Ideal::primitive_b() const {
  const std::int64_t a = primitive_norm();
  std::int64_t b = mod(2 * (b_ / c_) + 1, 2 * a);
  if (b > a) b -= 2 * a;
  return b;
}

bool Ideal::contains(const Element& x) const {
  const Vec v = coords(x);
  if (v.y % c_ != 0) return false;
  const i128 t = v.y / c_;
  return (v.x - t * b_) % a_ == 0;
}

Ideal Ideal::operator*(const Ideal& other) const {
  if (q_ != other.q_) throw InputError("ideals from different fields");
  std::vector<Vec> gens;
  for (const Vec& x : IdealBuilder::basis(*this)) {
    for (const Vec& y : IdealBuilder::basis(other)) gens.push_back(multiply(x, y, q_));
  }
  return IdealBuilder::span(q_, gens);
}

Ideal Ideal::conjugate() const {
  // conj(x + y w) = (x + y) - y w
  std::vector<Vec> gens;
  for (const Vec& v : IdealBuilder::basis(*this)) gens.push_back({v.x + v.y, -v.y});
  return IdealBuilder::span(q_, gens);
}

std::optional<Element> Ideal::generator() const {
  const std::int64_t n4 = 4 * norm();
  for (std::int64_t v = 0; static_cast<i128>(q_) * v * v <= n4; ++v) {
    const std::int64_t rest = narrow(n4 - static_cast<i128>(q_) * v * v);
    const std::int64_t u = isqrt(rest);
    if (u * u != rest || (u - v) % 2 != 0) continue;
    for (const Element& cand : {Element{u, v}, Element{u, -v}}) {
      if (contains(cand)) return cand;
    }
  }
  return std::nullopt;
}

}  // namespace gross
