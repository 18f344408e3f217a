#pragma once

// Integral ideals of O_K, K = Q(sqrt(-q)), as Z-lattices in Hermite normal
// form over the basis {1, w}, w = (1 + sqrt(-q)) / 2.

#include <cstdint>
#include <optional>

namespace gross {

/// alpha = (u + v sqrt(-q)) / 2 with u = v (mod 2).
struct Element {
  std::int64_t u = 2;
  std::int64_t v = 0;

  /// (u^2 + q v^2) / 4
  std::int64_t norm(std::int64_t q) const;
  Element times(const Element& other, std::int64_t q) const;
  Element conjugate() const { return {u, -v}; }

  bool operator==(const Element&) const = default;
};

/// Lattice A*Z + (B + C*w)*Z with A, C > 0, 0 <= B < A, C | A and C | B.
/// The norm of the ideal is A*C and its content (largest rational integer
/// dividing it) is C.
class Ideal {
 public:
  /// O_K itself.
  static Ideal unit(std::int64_t q);
  /// Primitive ideal <a, (b + sqrt(-q))/2>; requires b^2 = -q (mod 4a).
  static Ideal primitive(std::int64_t a, std::int64_t b, std::int64_t q);
  static Ideal principal(const Element& alpha, std::int64_t q);

  std::int64_t q() const { return q_; }
  std::int64_t norm() const { return a_ * c_; }
  std::int64_t content() const { return c_; }
  /// Norm of the primitive part (A / C).
  std::int64_t primitive_norm() const { return a_ / c_; }
  /// b in (-a, a] of the primitive part <a, (b + sqrt(-q))/2>.
  std::int64_t primitive_b() const;

  bool contains(const Element& x) const;
  Ideal operator*(const Ideal& other) const;
  Ideal conjugate() const;

  /// Generator of the ideal if it is principal (unique up to sign).
  std::optional<Element> generator() const;

  bool operator==(const Ideal&) const = default;

 private:
  friend class IdealBuilder;
  Ideal(std::int64_t q, std::int64_t a, std::int64_t b, std::int64_t c)
      : q_(q), a_(a), b_(b), c_(c) {}

  std::int64_t q_;
  std::int64_t a_;
  std::int64_t b_;
  std::int64_t c_;
};

}  // namespace gross
