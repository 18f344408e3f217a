#include "gross/hecke.hpp"

#include <string>

#include "gross/arith.hpp"
#include "gross/errors.hpp"

namespace gross {

namespace {

Element require_generator(const Ideal& ideal) {
  auto g = ideal.generator();
  if (!g) throw InternalError("expected a principal ideal of norm " + std::to_string(ideal.norm()));
  return *g;
}

// eps(beta) * embed(beta)
Complex principal_value(const Element& beta, std::int64_t q, const PrecisionContext& ctx) {
  Complex z = embed(beta, q, ctx);
  if (epsilon(beta, q) < 0) z = -z;
  return z;
}

// psi((a)) for a rational integer a coprime to q.
long rational_value(std::int64_t a, std::int64_t q) { return jacobi(a, q) * a; }

}  // namespace

int epsilon(const Element& x, std::int64_t q) {
  if (x.norm(q) % q == 0) throw ConductorError("element is not coprime to sqrt(-q)");
  const std::int64_t r = mod(mod(x.u, q) * inv_mod(2, q), q);
  return jacobi(r, q);
}

Complex embed(const Element& x, std::int64_t q, const PrecisionContext& ctx) {
  Complex z{ctx.real(x.u), ctx.real(x.v) * sqrt(ctx.real(q))};
  z.re /= 2;
  z.im /= 2;
  return z;
}

Ideal IdealRep::to_ideal(std::int64_t q) const {
  return Ideal::primitive(a, b, q) * Ideal::principal({2 * m, 0}, q);
}

std::vector<IdealRep> enumerate_ideals_of_norm(std::int64_t q, std::int64_t n) {
  if (n < 1) throw DomainError("ideal norm must be positive");
  std::vector<IdealRep> out;
  for (std::int64_t m = 1; m * m <= n; ++m) {
    if (n % (m * m) != 0) continue;
    const std::int64_t a = n / (m * m);
    for (std::int64_t b : sqrt_neg_q_mod(q, a)) out.push_back({a, b, m});
  }
  return out;
}

HeckeChar build_psi(std::shared_ptr<const ClassGroup> group, const PrecisionContext& ctx,
                    const std::vector<int>& branch) {
  const ClassGroup& G = *group;
  const std::int64_t q = G.q();
  const int h = G.h();
  const auto& gens = G.generators();
  if (!branch.empty() && branch.size() != gens.size()) {
    throw InputError("branch shift must have one entry per generator");
  }

  HeckeChar psi(group, ctx);
  for (const QuadForm& f : G.forms()) psi.rep_ideals_.push_back(Ideal::primitive(f.a, f.b, q));

  const std::size_t r = gens.size();
  auto unit_vector = [r](std::size_t i, int k) {
    std::vector<int> x(r, 0);
    x[i] = k;
    return x;
  };

  // g^{d} = (alpha): walk g^k = gamma_k R_k with R_k g conj(R_{k+1}) = (beta_k),
  // so gamma_{k+1} = gamma_k beta_k / N(R_{k+1}).
  for (std::size_t i = 0; i < r; ++i) {
    const int d = gens[i].order;
    const Ideal& g = psi.rep_ideals_[G.element(unit_vector(i, 1))];
    Complex value = ctx.complex(1);
    for (int k = 0; k < d; ++k) {
      const int cur = G.element(unit_vector(i, k));
      const int nxt = G.element(unit_vector(i, k + 1));
      const Element beta =
          require_generator(psi.rep_ideals_[cur] * g * psi.rep_ideals_[nxt].conjugate());
      value *= principal_value(beta, q, ctx);
      value = value / rational_value(G.forms()[nxt].a, q);
    }
    psi.generator_powers_.push_back(value);
    Complex root = principal_root(value, d, ctx);
    if (!branch.empty() && mod(branch[i], d) != 0) root *= ctx.root_of_unity(branch[i], d);
    psi.generator_values_.push_back(std::move(root));
  }

  // psi(R_x) = psi(R_{x - e_i}) psi(g_i) psi((a_x)) / (eps(beta) beta) where
  // R_{x - e_i} g_i conj(R_x) = (beta). Mixed-radix order visits x - e_i first.
  psi.rep_values_.assign(h, ctx.complex(0));
  std::vector<bool> done(h, false);
  psi.rep_values_[ClassGroup::identity()] = ctx.complex(1);
  done[ClassGroup::identity()] = true;
  const auto orders = G.invariants();
  std::vector<int> x(r, 0);
  for (int n = 1; n < h; ++n) {
    for (std::size_t i = 0; i < r; ++i) {  // increment mixed-radix counter
      if (++x[i] < orders[i]) break;
      x[i] = 0;
    }
    std::size_t i = 0;
    while (x[i] == 0) ++i;
    std::vector<int> prev = x;
    --prev[i];
    const int cur = G.element(x);
    const int before = G.element(prev);
    if (!done[before]) throw InternalError("class representative chain out of order");
    const Ideal& g = psi.rep_ideals_[G.element(unit_vector(i, 1))];
    const Element beta =
        require_generator(psi.rep_ideals_[before] * g * psi.rep_ideals_[cur].conjugate());
    Complex value = psi.rep_values_[before] * psi.generator_values_[i];
    value = value * rational_value(G.forms()[cur].a, q);
    psi.rep_values_[cur] = value / principal_value(beta, q, ctx);
    done[cur] = true;
  }
  return psi;
}

Complex HeckeChar::on_primitive(std::int64_t a, std::int64_t b, int class_index) const {
  const std::int64_t q = this->q();
  if (a % q == 0) throw ConductorError("ideal is divisible by sqrt(-q)");
  const Ideal ideal = Ideal::primitive(a, b, q) * rep_ideals_[class_index].conjugate();
  const Element beta = require_generator(ideal);
  Complex value = principal_value(beta, q, ctx_) * rep_values_[class_index];
  return value / rational_value(group_->forms()[class_index].a, q);
}

Complex HeckeChar::operator()(const IdealRep& ideal) const {
  const std::int64_t q = this->q();
  if (ideal.norm() % q == 0) throw ConductorError("ideal norm is divisible by q");
  const std::int64_t c = (ideal.b * ideal.b + q) / (4 * ideal.a);
  const int cls = group_->index_of({ideal.a, ideal.b, c});
  return on_primitive(ideal.a, ideal.b, cls) * rational_value(ideal.m, q);
}

Complex psi_ideal(const HeckeChar& psi, const IdealRep& ideal) { return psi(ideal); }

PrimeTable::PrimeTable(const HeckeChar& psi, std::int64_t cutoff)
    : q_(psi.q()), cutoff_(cutoff) {
  if (cutoff < 1) throw InputError("coefficient cutoff must be >= 1");
  if (cutoff > kMaxCoefficientCutoff) {
    throw ResourceError("coefficient cutoff " + std::to_string(cutoff) + " exceeds the memory budget");
  }
  const ClassGroup& G = psi.group();
  spf_ = smallest_prime_factors(static_cast<std::uint32_t>(cutoff));
  split_slot_.assign(spf_.size(), -1);
  for (std::int64_t p = 2; p <= cutoff; ++p) {
    if (spf_[p] != p || p == q_) continue;
    if (jacobi(p, q_) != 1) continue;
    const auto roots = sqrt_neg_q_mod(q_, p);
    if (roots.empty()) throw InternalError("split prime without a square root of -q");
    const std::int64_t b = roots.front();
    const int cls = G.index_of({p, b, (b * b + q_) / (4 * p)});
    split_slot_[p] = static_cast<std::int32_t>(split_.size());
    split_.push_back({psi.on_primitive(p, b, cls), cls, G.inverse(cls)});
  }
}

PrimeKind PrimeTable::kind(std::uint32_t p) const {
  if (p == q_) return PrimeKind::kRamified;
  return split_slot_[p] >= 0 ? PrimeKind::kSplit : PrimeKind::kInert;
}

const PrimeTable::Split& PrimeTable::split(std::uint32_t p) const {
  if (split_slot_[p] < 0) throw InputError("prime is not split");
  return split_[split_slot_[p]];
}

CoeffSeries coefficients(const PrimeTable& primes, const ClassGroup& group, const ClassChar& chi,
                         int character_index, const PrecisionContext& ctx) {
  const std::int64_t cutoff = primes.cutoff();
  const auto& spf = primes.smallest_factor();
  std::vector<Complex> chi_values;
  chi_values.reserve(group.h());
  for (int c = 0; c < group.h(); ++c) chi_values.push_back(chi.on_index(group, c, ctx));

  CoeffSeries out;
  out.q = primes.q();
  out.character_index = character_index;
  out.a.assign(static_cast<std::size_t>(cutoff) + 1, ctx.complex(0));
  out.a[1] = ctx.complex(1);
  Complex scratch(ctx.bits());
  for (std::int64_t n = 2; n <= cutoff; ++n) {
    const std::uint32_t p = spf[n];
    std::int64_t rest = n;
    std::int64_t pk = 1;
    while (rest % p == 0) {
      rest /= p;
      pk *= p;
    }
    if (rest > 1) {
      mul_into(out.a[n], out.a[pk], out.a[rest]);
      continue;
    }
    const PrimeKind kind = primes.kind(p);
    if (kind == PrimeKind::kRamified) continue;  // a_{q^k} = 0
    if (n == p) {
      if (kind == PrimeKind::kSplit) {
        const auto& s = primes.split(p);
        mul_into(out.a[n], s.psi, chi_values[s.class_index]);
        mul_into(scratch, conj(s.psi), chi_values[s.conj_class_index]);
        out.a[n] += scratch;
      }
      continue;
    }
    // a_{p^k} = a_p a_{p^{k-1}} - p a_{p^{k-2}}
    mul_into(out.a[n], out.a[p], out.a[n / p]);
    out.a[n] -= out.a[n / p / p] * static_cast<long>(p);
  }
  return out;
}

CoeffSeries coefficients(const HeckeChar& psi, const ClassChar& chi, std::int64_t cutoff) {
  const PrimeTable primes(psi, cutoff);
  const auto orders = psi.group().invariants();
  int index = 0;
  int scale = 1;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    index += chi.exponents()[i] * scale;
    scale *= orders[i];
  }
  return coefficients(primes, psi.group(), chi, index, psi.context());
}

}  // namespace gross
