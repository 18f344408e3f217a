#pragma once

// The Grossencharacter psi of K = Q(sqrt(-q)) with conductor (sqrt(-q)),
// psi((alpha)) = eps(alpha) * alpha, extended to all ideals coprime to q, and
// the Dirichlet coefficients of L(psi chi, s) for class-group characters chi.

#include <cstdint>
#include <memory>
#include <vector>

#include "gross/classgroup.hpp"
#include "gross/ideal.hpp"
#include "gross/numerics.hpp"

namespace gross {

/// Quadratic-residue sign of alpha = (u + v sqrt(-q))/2 modulo sqrt(-q):
/// the Legendre symbol of u/2 (mod q).
int epsilon(const Element& x, std::int64_t q);

/// Image of alpha under sqrt(-q) -> +i sqrt(q).
Complex embed(const Element& x, std::int64_t q, const PrecisionContext& ctx);

/// m * <a, (b + sqrt(-q))/2>, norm m^2 a.
struct IdealRep {
  std::int64_t a = 1;
  std::int64_t b = 1;
  std::int64_t m = 1;

  std::int64_t norm() const { return m * m * a; }
  Ideal to_ideal(std::int64_t q) const;
};

/// Every ideal of norm n, grouped by content m ascending, then by b.
std::vector<IdealRep> enumerate_ideals_of_norm(std::int64_t q, std::int64_t n);

class HeckeChar {
 public:
  const ClassGroup& group() const { return *group_; }
  std::shared_ptr<const ClassGroup> group_ptr() const { return group_; }
  const PrecisionContext& context() const { return ctx_; }
  std::int64_t q() const { return group_->q(); }

  /// psi(g_i) for the basis generators.
  const std::vector<Complex>& generator_values() const { return generator_values_; }
  /// Generator alpha_i of g_i^{d_i}, as eps(alpha_i) * embed(alpha_i).
  const std::vector<Complex>& generator_powers() const { return generator_powers_; }
  /// psi on the reduced ideal of each class, indexed like group().forms().
  const Complex& on_class_representative(int index) const { return rep_values_[index]; }

  /// psi(I); throws ConductorError when q | N(I).
  Complex operator()(const IdealRep& ideal) const;
  /// psi on a primitive ideal of known class index.
  Complex on_primitive(std::int64_t a, std::int64_t b, int class_index) const;

 private:
  friend HeckeChar build_psi(std::shared_ptr<const ClassGroup>, const PrecisionContext&,
                             const std::vector<int>&);
  HeckeChar(std::shared_ptr<const ClassGroup> group, PrecisionContext ctx)
      : group_(std::move(group)), ctx_(std::move(ctx)) {}

  std::shared_ptr<const ClassGroup> group_;
  PrecisionContext ctx_;
  std::vector<Complex> generator_values_;
  std::vector<Complex> generator_powers_;
  std::vector<Complex> rep_values_;
  std::vector<Ideal> rep_ideals_;
};

/// Builds psi with psi(g_i) = principal d_i-th root of eps(alpha_i) alpha_i,
/// multiplied by zeta_{d_i}^{branch[i]} when a branch shift is supplied.
HeckeChar build_psi(std::shared_ptr<const ClassGroup> group, const PrecisionContext& ctx,
                    const std::vector<int>& branch = {});

/// psi(I) (free-function spelling of HeckeChar::operator()).
Complex psi_ideal(const HeckeChar& psi, const IdealRep& ideal);

enum class PrimeKind : std::uint8_t { kRamified, kSplit, kInert };

/// Per-prime psi data up to a cutoff, shared by all twists chi.
class PrimeTable {
 public:
  struct Split {
    Complex psi;          // psi(p) for p = <p, (b + sqrt(-q))/2>
    int class_index;      // class of p
    int conj_class_index; // class of conj(p)
  };

  PrimeTable(const HeckeChar& psi, std::int64_t cutoff);

  std::int64_t q() const { return q_; }
  std::int64_t cutoff() const { return cutoff_; }
  const std::vector<std::uint32_t>& smallest_factor() const { return spf_; }
  PrimeKind kind(std::uint32_t p) const;
  const Split& split(std::uint32_t p) const;

 private:
  std::int64_t q_;
  std::int64_t cutoff_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::int32_t> split_slot_;  // index into split_ or -1
  std::vector<Split> split_;
};

/// a_1..a_M of L(psi chi, s); index 0 is unused and zero.
struct CoeffSeries {
  std::int64_t q = 0;
  int character_index = 0;
  std::vector<Complex> a;

  std::int64_t cutoff() const { return static_cast<std::int64_t>(a.size()) - 1; }
};

inline constexpr std::int64_t kMaxCoefficientCutoff = 20'000'000;

CoeffSeries coefficients(const PrimeTable& primes, const ClassGroup& group,
                         const ClassChar& chi, int character_index,
                         const PrecisionContext& ctx);
CoeffSeries coefficients(const HeckeChar& psi, const ClassChar& chi, std::int64_t cutoff);

}  // namespace gross
