#include "gross/classgroup.hpp"

#include <numeric>
#include <string>

#include "gross/arith.hpp"
#include "gross/errors.hpp"
#include "gross/ideal.hpp"

namespace gross {

namespace {

std::int64_t q_of(const QuadForm& f) {
  const std::int64_t d = f.discriminant();
  if (d >= 0 || f.a <= 0) throw InputError("form must be positive definite");
  return -d;
}

std::int64_t c_from(std::int64_t a, std::int64_t b, std::int64_t q) {
  const __int128 num = static_cast<__int128>(b) * b + q;
  if (num % (4 * a) != 0) throw InputError("b^2 != -q (mod 4a)");
  return static_cast<std::int64_t>(num / (4 * a));
}

// Mixed-radix index, first coordinate varying fastest.
int radix_index(const std::vector<int>& x, const std::vector<int>& orders) {
  int index = 0;
  int scale = 1;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    index += static_cast<int>(mod(x[i], orders[i])) * scale;
    scale *= orders[i];
  }
  return index;
}

}  // namespace

std::int64_t QuadForm::discriminant() const {
  const __int128 d = static_cast<__int128>(b) * b - static_cast<__int128>(4) * a * c;
  return static_cast<std::int64_t>(d);
}

bool QuadForm::is_reduced() const {
  if (a <= 0) return false;
  const std::int64_t abs_b = b < 0 ? -b : b;
  if (!(abs_b <= a && a <= c)) return false;
  if ((abs_b == a || a == c) && b < 0) return false;
  return true;
}

void require_class_group_prime(std::int64_t q) {
  if (q < 3 || !is_prime(static_cast<std::uint64_t>(q))) {
    throw InputError("q = " + std::to_string(q) + " is not prime");
  }
  if (q % 4 != 3) throw InputError("q = " + std::to_string(q) + " is not 3 mod 4");
}

std::vector<QuadForm> reduced_forms(std::int64_t q) {
  require_class_group_prime(q);
  std::vector<QuadForm> out;
  for (std::int64_t a = 1; 3 * a * a <= q; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      if ((b * b + q) % (4 * a) != 0) continue;
      const std::int64_t c = (b * b + q) / (4 * a);
      const QuadForm f{a, b, c};
      if (f.is_reduced()) out.push_back(f);
    }
  }
  return out;
}

QuadForm reduce(const QuadForm& f) {
  const std::int64_t q = q_of(f);
  std::int64_t a = f.a;
  std::int64_t b = f.b;
  for (;;) {
    b = mod(b, 2 * a);
    if (b > a) b -= 2 * a;
    const std::int64_t c = c_from(a, b, q);
    if (a > c) {
      b = -b;
      a = c;
      continue;
    }
    if (a == c && b < 0) b = -b;
    return {a, b, c};
  }
}

QuadForm compose(const QuadForm& f, const QuadForm& g) {
  const std::int64_t q = q_of(f);
  if (q_of(g) != q) throw InputError("compose: discriminants differ");
  const Ideal product = Ideal::primitive(f.a, f.b, q) * Ideal::primitive(g.a, g.b, q);
  const std::int64_t a = product.primitive_norm();
  const std::int64_t b = product.primitive_b();
  return reduce({a, b, c_from(a, b, q)});
}

QuadForm inverse(const QuadForm& f) { return reduce({f.a, -f.b, f.c}); }

QuadForm principal_form(std::int64_t q) { return {1, 1, (1 + q) / 4}; }

std::vector<int> ClassGroup::invariants() const {
  std::vector<int> out;
  for (const auto& g : generators_) out.push_back(g.order);
  return out;
}

int ClassGroup::exponent() const {
  int l = 1;
  for (const auto& g : generators_) l = std::lcm(l, g.order);
  return l;
}

int ClassGroup::index_of(const QuadForm& f) const {
  const QuadForm r = reduce(f);
  if (-r.discriminant() != q_) throw InputError("form has the wrong discriminant");
  auto it = lookup_.find({r.a, r.b});
  if (it == lookup_.end()) throw InternalError("reduced form missing from class group");
  return it->second;
}

int ClassGroup::order(int i) const {
  int k = 1;
  for (int y = i; y != identity(); y = multiply(y, i)) ++k;
  return k;
}

int ClassGroup::element(const std::vector<int>& x) const {
  if (x.size() != generators_.size()) throw InputError("exponent vector has the wrong rank");
  return from_mixed_radix_[radix_index(x, invariants())];
}

ClassGroup class_group(std::int64_t q) {
  ClassGroup g;
  g.q_ = q;
  g.forms_ = reduced_forms(q);
  const int h = g.h();
  for (int i = 0; i < h; ++i) g.lookup_[{g.forms_[i].a, g.forms_[i].b}] = i;
  if (g.forms_.front() != principal_form(q)) throw InternalError("principal form not first");

  g.table_.assign(static_cast<std::size_t>(h) * h, 0);
  for (int i = 0; i < h; ++i) {
    for (int j = i; j < h; ++j) {
      const int k = g.index_of(compose(g.forms_[i], g.forms_[j]));
      g.table_[static_cast<std::size_t>(i) * h + j] = k;
      g.table_[static_cast<std::size_t>(j) * h + i] = k;
    }
  }
  g.inverse_.resize(h);
  for (int i = 0; i < h; ++i) g.inverse_[i] = g.index_of(inverse(g.forms_[i]));

  // Invariant-factor basis, largest order first: pick x of maximal order e
  // in G/H, then correct it by elements of H so that x^e = 1 exactly.
  std::vector<int> basis;
  std::vector<int> orders;
  std::vector<std::vector<int>> vec(h);  // exponents over `basis` for members of H
  std::vector<bool> in_h(h, false);
  in_h[0] = true;
  int h_size = 1;
  while (h_size < h) {
    int best = -1;
    int best_order = 0;
    for (int x = 0; x < h; ++x) {
      if (in_h[x]) continue;
      int e = 1;
      for (int y = x; !in_h[y]; y = g.multiply(y, x)) ++e;
      if (e > best_order) {
        best_order = e;
        best = x;
      }
    }
    int power = 0;  // best^e
    {
      int y = 0;
      for (int k = 0; k < best_order; ++k) y = g.multiply(y, best);
      power = y;
    }
    int corrected = best;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const int y = vec[power][j];
      if (y % best_order != 0) throw InternalError("class group basis correction failed");
      const int steps = static_cast<int>(mod(-(y / best_order), orders[j]));
      for (int s = 0; s < steps; ++s) corrected = g.multiply(corrected, basis[j]);
    }
    if (g.order(corrected) != best_order) throw InternalError("corrected generator has wrong order");

    std::vector<int> members;
    for (int x = 0; x < h; ++x) {
      if (in_h[x]) members.push_back(x);
    }
    for (int x : members) vec[x].push_back(0);
    int step = corrected;
    for (int k = 1; k < best_order; ++k) {
      for (int x : members) {
        const int y = g.multiply(x, step);
        if (in_h[y]) throw InternalError("class group basis is not independent");
        in_h[y] = true;
        vec[y] = vec[x];
        vec[y].back() = k;
      }
      step = g.multiply(step, corrected);
    }
    basis.push_back(corrected);
    orders.push_back(best_order);
    h_size *= best_order;
  }

  // Ascending orders d_1 | d_2 | ... | d_r.
  const std::size_t r = basis.size();
  for (std::size_t j = 0; j < r; ++j) {
    const std::size_t src = r - 1 - j;
    g.generators_.push_back({g.forms_[basis[src]], orders[src]});
  }
  g.exponents_.assign(h, {});
  g.from_mixed_radix_.assign(h, -1);
  const auto inv = g.invariants();
  for (int x = 0; x < h; ++x) {
    std::vector<int> e(r);
    for (std::size_t j = 0; j < r; ++j) e[j] = vec[x][r - 1 - j];
    g.from_mixed_radix_[radix_index(e, inv)] = x;
    g.exponents_[x] = std::move(e);
  }
  return g;
}

std::vector<int> dlog(const ClassGroup& group, const QuadForm& f) {
  return group.exponents(group.index_of(f));
}

ClassChar::ClassChar(std::vector<int> exponents, std::vector<int> orders)
    : exponents_(std::move(exponents)), orders_(std::move(orders)), modulus_(1) {
  if (exponents_.size() != orders_.size()) throw InputError("character rank mismatch");
  for (int d : orders_) modulus_ = std::lcm(modulus_, static_cast<long>(d));
}

bool ClassChar::is_trivial() const {
  for (int e : exponents_) {
    if (e != 0) return false;
  }
  return true;
}

long ClassChar::phase(const std::vector<int>& x) const {
  long k = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    k += static_cast<long>(exponents_[i]) * x[i] % orders_[i] * (modulus_ / orders_[i]);
  }
  return mod(k, modulus_);
}

Complex ClassChar::operator()(const ClassGroup& group, const QuadForm& f,
                              const PrecisionContext& ctx) const {
  return ctx.root_of_unity(phase(dlog(group, f)), modulus_);
}

Complex ClassChar::on_index(const ClassGroup& group, int index, const PrecisionContext& ctx) const {
  return ctx.root_of_unity(phase(group.exponents(index)), modulus_);
}

std::vector<ClassChar> characters(const ClassGroup& group) {
  const auto orders = group.invariants();
  std::vector<ClassChar> out;
  out.reserve(group.h());
  for (int n = 0; n < group.h(); ++n) {
    std::vector<int> e(orders.size());
    int rest = n;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      e[i] = rest % orders[i];
      rest /= orders[i];
    }
    out.emplace_back(std::move(e), orders);
  }
  return out;
}

std::string format_invariants(const std::vector<int>& invariants) {
  if (invariants.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < invariants.size(); ++i) {
    if (i) s += 'x';
    s += std::to_string(invariants[i]);
  }
  return s;
}

}  // namespace gross
