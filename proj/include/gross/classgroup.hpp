#pragma once

// Class group of K = Q(sqrt(-q)) through reduced binary quadratic forms of
// discriminant -q. The form (a, b, c) stands for the ideal class of
// <a, (b + sqrt(-q))/2>.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gross/numerics.hpp"

namespace gross {

struct QuadForm {
  std::int64_t a = 1;
  std::int64_t b = 1;
  std::int64_t c = 1;

  /// b^2 - 4ac
  std::int64_t discriminant() const;
  bool is_reduced() const;

  bool operator==(const QuadForm&) const = default;
  auto operator<=>(const QuadForm&) const = default;
};

/// Throws InputError unless q is a prime with q = 3 (mod 4).
void require_class_group_prime(std::int64_t q);

/// Reduced forms of discriminant -q ordered by (a, b).
std::vector<QuadForm> reduced_forms(std::int64_t q);

QuadForm reduce(const QuadForm& f);
QuadForm compose(const QuadForm& f, const QuadForm& g);
QuadForm inverse(const QuadForm& f);
QuadForm principal_form(std::int64_t q);

/// Finite abelian group of reduced forms together with an invariant-factor
/// basis g_1, ..., g_r of orders d_1 | d_2 | ... | d_r.
class ClassGroup {
 public:
  struct Generator {
    QuadForm form;
    int order;
  };

  std::int64_t q() const { return q_; }
  int h() const { return static_cast<int>(forms_.size()); }
  const std::vector<QuadForm>& forms() const { return forms_; }
  const std::vector<Generator>& generators() const { return generators_; }
  std::vector<int> invariants() const;
  /// lcm of the invariants (1 for the trivial group).
  int exponent() const;

  /// Index of the class of f in forms(); f need not be reduced.
  int index_of(const QuadForm& f) const;
  int multiply(int i, int j) const { return table_[static_cast<std::size_t>(i) * h() + j]; }
  int inverse(int i) const { return inverse_[i]; }
  static constexpr int identity() { return 0; }
  int order(int i) const;

  /// Exponent vector of the class with index i.
  const std::vector<int>& exponents(int i) const { return exponents_[i]; }
  /// Index of prod g_k^{x_k}; entries taken modulo the orders.
  int element(const std::vector<int>& x) const;

 private:
  friend ClassGroup class_group(std::int64_t q);

  std::int64_t q_ = 0;
  std::vector<QuadForm> forms_;
  std::map<std::pair<std::int64_t, std::int64_t>, int> lookup_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<Generator> generators_;
  std::vector<std::vector<int>> exponents_;
  std::vector<int> from_mixed_radix_;
};

ClassGroup class_group(std::int64_t q);

/// Exponent vector x with prod g_i^{x_i} equivalent to f.
std::vector<int> dlog(const ClassGroup& group, const QuadForm& f);

/// chi(prod g_i^{x_i}) = prod zeta_{d_i}^{e_i x_i}.
class ClassChar {
 public:
  ClassChar(std::vector<int> exponents, std::vector<int> orders);

  const std::vector<int>& exponents() const { return exponents_; }
  bool is_trivial() const;

  /// chi(x) = exp(2 pi i k / L) with L = lcm(d_i); returns k in [0, L).
  long phase(const std::vector<int>& x) const;
  long modulus() const { return modulus_; }

  Complex operator()(const ClassGroup& group, const QuadForm& f, const PrecisionContext& ctx) const;
  Complex on_index(const ClassGroup& group, int index, const PrecisionContext& ctx) const;

 private:
  std::vector<int> exponents_;
  std::vector<int> orders_;
  long modulus_;
};

/// All h characters, trivial first, in mixed-radix order of exponents.
std::vector<ClassChar> characters(const ClassGroup& group);

std::string format_invariants(const std::vector<int>& invariants);

}  // namespace gross
