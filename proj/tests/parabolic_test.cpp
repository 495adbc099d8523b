#include <cmath>

#include "doctest.h"
#include "overhang/balance.hpp"
#include "overhang/parabolic.hpp"

using namespace overhang;

TEST_CASE("slab construction") {
  CHECK(build_slab(2, 0).blocks.size() == 2);
  CHECK(build_slab(3, 0).blocks.size() == 8);
  CHECK(build_slab(6, 0).blocks.size() == 50);
  CHECK_THROWS_AS(build_slab(1, 0), std::invalid_argument);

  auto s = build_slab(5, 3);
  // Bottom and top rows are 5-rows, symmetric about x = 0.
  int bottom = 0, top = 0;
  for (const auto& b : s.blocks) {
    if (b.level == 3) ++bottom;
    if (b.level == 3 + 2 * 5 - 4) ++top;
    CHECK(*b.x_exact >= Rational(-5, 2));
    CHECK(*b.x_exact + 1 <= Rational(5, 2));
  }
  CHECK(bottom == 5);
  CHECK(top == 5);
}

TEST_CASE("stack sizes and overhangs") {
  auto p6 = build_parabolic(6);
  CHECK(p6.stack.size() == 111);
  CHECK(overhang_exact(p6.stack) == Rational(3));

  CHECK(build_parabolic(2).stack.size() == 3);
  CHECK(overhang_exact(build_parabolic(2).stack) == Rational(1));
  CHECK(build_parabolic(3).stack.size() == 11);
  CHECK(overhang_exact(build_parabolic(3).stack) == Rational(3, 2));
  CHECK_THROWS_AS(build_parabolic(1), std::invalid_argument);
}

TEST_CASE("full stacks are balanced, certified exactly") {
  for (int d = 2; d <= 10; ++d) {
    auto p = build_parabolic(d);
    auto verdict = is_balanced(p.stack, BalanceMode::Exact);
    CHECK(verdict.balanced);
    CHECK(verdict.certified);
  }
}

TEST_CASE("edge-force schedule values") {
  auto sched = force_schedule(6);  // ordered r = 6 down to 2
  CHECK(sched[0].r == 6);
  CHECK(sched[0].g == 0);
  CHECK(sched[1].g == 5);
  CHECK(sched[2].g == Rational(41, 4));
  // g(r-1) continues the chain as g'(r).
  for (size_t i = 0; i + 1 < sched.size(); ++i)
    CHECK(sched[i].g_prime == sched[i + 1].g);

  // The recurrence matches the closed form (checked exactly inside
  // force_schedule; spot-check the values numerically as well).
  for (int d : {10, 25, 50}) {
    for (const auto& e : force_schedule(d)) {
      double closed = 0.0;
      for (int i = e.r; i < d; ++i) closed += double(i) * i;
      closed /= e.r;
      CHECK(to_double(e.g) == doctest::Approx(closed).epsilon(1e-12));
    }
  }
}

TEST_CASE("slab force assignment balances every block") {
  CHECK(verify_slab_balance(build_slab(2, 0), Rational(7, 3)));
  CHECK(verify_slab_balance(build_slab(3, 0), Rational(0)));
  CHECK(verify_slab_balance(build_slab(6, 0), Rational(0)));

  // The loads each slab sees inside a full 6-stack.
  for (const auto& e : force_schedule(6))
    CHECK(verify_slab_balance(build_slab(e.r, 0), e.g));

  CHECK_FALSE(verify_slab_balance(build_slab(4, 0), Rational(-1)));
}

namespace {

Stack bottom_rows(const Stack& full, int rows) {
  Stack s;
  for (const auto& b : full.blocks)
    if (b.level < rows) s.blocks.push_back(b);
  return s;
}

}  // namespace

TEST_CASE("the bottom of a full stack cannot stand alone") {
  auto full = build_parabolic(4).stack;

  // Rows of 1, 2, 3: an inverted triangle, unbalanced.
  Stack three = bottom_rows(full, 3);
  CHECK(three.size() == 6);
  CHECK_FALSE(is_balanced(three, BalanceMode::Exact).balanced);

  // Still unbalanced after the first block of the fourth row (the left
  // block of the 2-row above, per the laying order).
  three.blocks.emplace_back(Rational(-1), 3);
  CHECK_FALSE(is_balanced(three, BalanceMode::Exact).balanced);

  // Rows of 1, 2, 3, 2, 3, 4 likewise cannot stand alone.
  Stack six = bottom_rows(full, 6);
  CHECK(six.size() == 15);
  CHECK_FALSE(is_balanced(six, BalanceMode::Exact).balanced);
}

TEST_CASE("incremental variant sizes and laying order shape") {
  auto [two, order2] = build_modified_parabolic(2);
  CHECK(two.size() == 2);
  CHECK(order2.size() == 2);

  auto [three, order3] = build_modified_parabolic(3);
  CHECK(three.size() == 10);

  // The first block laid always sits on the table.
  for (int d = 2; d <= 6; ++d) {
    auto [s, order] = build_modified_parabolic(d);
    CHECK(s.size() == static_cast<int>(order.size()));
    CHECK(s.blocks[order[0]].level == 0);
  }
}

TEST_CASE("every laying-order prefix is balanced") {
  for (int d = 2; d <= 5; ++d) {
    auto [s, order] = build_modified_parabolic(d);
    Stack prefix;
    for (int idx : order) {
      prefix.blocks.push_back(s.blocks[idx]);
      auto verdict = is_balanced(prefix, BalanceMode::Exact);
      CHECK(verdict.balanced);
    }
  }
}

TEST_CASE("overhang lower bound at given block budgets") {
  for (long long n : {4LL, 12LL, 112LL, 1000LL}) {
    auto fit = best_parabolic_for(n);
    CHECK(fit.stack.size() == n);
    CHECK(fit.d / 2.0 > std::cbrt(3.0 * double(n) / 16.0) - 0.25);
  }
  // A fit with a leftover pile still balances.
  auto fit = best_parabolic_for(12);
  CHECK(fit.d == 3);
  CHECK(is_balanced(fit.stack, BalanceMode::Exact).balanced);
}
