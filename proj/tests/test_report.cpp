#include "doctest.h"
#include "gross/errors.hpp"
#include "gross/report.hpp"
#include "support.hpp"

using namespace gross;
using gross::test::Rng;

TEST_CASE("perfect squares") {
  auto [zero_sq, zero_root] = is_perfect_square(0);
  CHECK(zero_sq);
  CHECK(*zero_root == 0);
  auto [sq, root] = is_perfect_square(729);
  CHECK(sq);
  CHECK(*root == 27);
  auto [not_sq, none] = is_perfect_square(2);
  CHECK_FALSE(not_sq);
  CHECK_FALSE(none.has_value());
}

TEST_CASE("perfect squares on random big integers") {
  Rng rng(61);
  for (int i = 0; i < 200; ++i) {
    mpz_class r = static_cast<unsigned long>(rng.next() >> 1);
    r *= static_cast<unsigned long>(rng.next() >> 1);
    const mpz_class n = r * r;
    auto [sq, root] = is_perfect_square(n);
    CHECK(sq);
    CHECK(*root == r);
    CHECK_FALSE(is_perfect_square(n + 1).first);
    if (r > 1) CHECK_FALSE(is_perfect_square(n - 1).first);
  }
}

TEST_CASE("q = 7 has trivial Sha") {
  const ShaReport r = sha_order(7, 32);
  CHECK(r.h == 1);
  CHECK(r.sha_round == 1);
  CHECK(r.residual < make_context(32).tolerance(10));
  CHECK(r.verified);
  CHECK(r.is_square);
  CHECK(*r.sha_sqrt == 1);
  CHECK(r.sha_odd);
  CHECK(r.all_nonzero);
  CHECK(abs(r.j + 3375) < make_context(32).tolerance(28));
  CHECK(r.characters.size() == 1);
}

TEST_CASE("squares for q in {71, 79, 127, 151}") {
  const std::pair<std::int64_t, long> expect[] = {{71, 81}, {79, 81}, {127, 81}, {151, 6561}};
  for (const auto& [q, sha] : expect) {
    const ShaReport r = sha_order(q, 32);
    CHECK(r.verified);
    CHECK(r.sha_round == sha);
    CHECK(r.is_square);
    CHECK(*r.sha_sqrt * *r.sha_sqrt == r.sha_round);
  }
}

TEST_CASE("more digits keep the integer and shrink the residual") {
  for (std::int64_t q : {23, 71}) {
    const ShaReport a = sha_order(q, 32);
    const ShaReport b = sha_order(q, 48);
    CHECK(a.sha_round == b.sha_round);
    CHECK(b.residual < a.residual);
  }
}

TEST_CASE("report invariants") {
  for (std::int64_t q : {23, 47, 103}) {
    const ShaReport r = sha_order(q, 32);
    const PrecisionContext ctx = make_context(32);
    CHECK(r.power_check < ctx.tolerance(30));
    CHECK(r.max_w_dev < ctx.tolerance(16));
    CHECK(r.max_chi_residual < ctx.tolerance(27));
    CHECK(static_cast<int>(r.characters.size()) == r.h);
    CHECK(r.G > 0);
    CHECK(r.L_total > 0);
    CHECK(r.sha_odd == (r.sha_round % 2 != 0));
  }
}

TEST_CASE("branch and grid choices leave Sha unchanged") {
  for (std::int64_t q : {23, 31}) {
    const ShaReport base = sha_order(q, 32);
    ShaOptions grid;
    grid.lfun.grid = shifted_grid();
    ShaOptions branch;
    branch.lfun.branch = {2};
    const ShaReport a = sha_order(q, 32, grid);
    const ShaReport b = sha_order(q, 32, branch);
    CHECK(a.sha_round == base.sha_round);
    CHECK(b.sha_round == base.sha_round);
    CHECK(abs(a.sha_real - base.sha_real) < make_context(32).tolerance(25));
    CHECK(abs(b.sha_real - base.sha_real) < make_context(32).tolerance(25));
  }
}

TEST_CASE("large Sha at low precision is reported unverified, not rounded") {
  // Sha(479) has 24 digits, so 32 digits leave no room for 16 after the point.
  const ShaReport r = sha_order(479, 32);
  CHECK_FALSE(r.verified);
  CHECK(r.residual < make_context(32).tolerance(10));
  CHECK_THROWS_AS(require_verified(r), PrecisionExhausted);

  const ShaReport more = sha_order(479, 48);
  CHECK(more.verified);
  CHECK(more.sha_round == r.sha_round);
  CHECK(more.is_square);
  CHECK_NOTHROW(require_verified(more));
}

TEST_CASE("sha_order preconditions") {
  CHECK_THROWS_AS(sha_order(73, 32), InputError);
  CHECK_THROWS_AS(sha_order(15, 32), InputError);
  CHECK_THROWS_AS(sha_order(7, 5), InvalidPrecision);
}
