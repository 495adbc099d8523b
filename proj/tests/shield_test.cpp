#include "doctest.h"
#include "overhang/balance.hpp"
#include "overhang/shield.hpp"

using namespace overhang;

TEST_CASE("rationalized spines keep integral total weight") {
  auto sp = rationalize_spine(optimize(100.0).design);
  CHECK(sp.t[sp.k] == Rational(100));
  for (const auto& wi : sp.w) CHECK(wi >= 0);
  Rational oh(0);
  for (const auto& di : sp.d) oh += di;
  CHECK(sp.x[0] + 1 == oh);
  CHECK(to_double(oh) == doctest::Approx(3.6979).epsilon(1e-3));
}

TEST_CASE("shield balance conditions hold exactly at every layer") {
  for (double w : {25.0, 100.0}) {
    auto sp = rationalize_spine(optimize(w).design);
    auto res = place_shields(sp);
    REQUIRE(res.complete);
    const Rational half(1, 2);
    for (int i = 1; i <= sp.k - 1; ++i) {
      const auto& cur = res.layers[i];
      Rational u_below = i < sp.k - 1 ? res.layers[i + 1].u : Rational(0);
      Rational z_below = i < sp.k - 1 ? res.layers[i + 1].z : Rational(0);
      // Force and moment rows of shield i, exact.
      CHECK(cur.u + cur.v + 1 == u_below + sp.w[i]);
      CHECK(cur.z * cur.u + cur.y * cur.v + (cur.y + half) ==
            z_below * u_below + sp.x[i] * sp.w[i]);
      CHECK(cur.u >= 0);
      CHECK(cur.v >= 0);
      // Placement windows.
      CHECK(cur.y > sp.x[i] - 1);
      CHECK(cur.y <= sp.x[i - 1] - 1);
      if (i < sp.k - 1) {
        CHECK(cur.y <= res.layers[i + 1].z);
        CHECK(res.layers[i + 1].z <= res.layers[i + 1].y + 1);
      }
    }
  }
}

TEST_CASE("weight 100 conversion needs exactly one tower") {
  auto result = convert(optimize(100.0).design);
  REQUIRE(result.success);
  CHECK(result.towers.size() == 1);
  CHECK(result.stack.size() == 100);
  CHECK(result.stack.weights.empty());

  auto verdict = is_balanced(result.stack, BalanceMode::Exact);
  CHECK(verdict.balanced);
  CHECK(verdict.certified);
  CHECK(to_double(overhang_exact(result.stack)) ==
        doctest::Approx(3.6979).epsilon(1e-3));
}

TEST_CASE("conversions succeed for weights 10 and 50") {
  for (int n : {10, 50}) {
    auto result = convert(optimize(n).design);
    REQUIRE(result.success);
    CHECK(result.stack.size() == n);
    auto verdict = is_balanced(result.stack, BalanceMode::Exact);
    CHECK(verdict.balanced);
    CHECK(verdict.certified);
    CHECK(to_double(overhang_exact(result.stack)) ==
          doctest::Approx(optimize(n).value).epsilon(1e-6));
  }
}

TEST_CASE("weights 3, 5, 7 cannot be converted") {
  for (int n : {3, 5, 7}) {
    auto result = convert(optimize(n).design);
    CHECK_FALSE(result.success);
    CHECK_FALSE(result.diagnostics.empty());
  }
}

TEST_CASE("trivial and degenerate conversions") {
  // Weight 1: the optimal spine is a single unloaded block.
  auto one = convert(optimize(1.0).design);
  REQUIRE(one.success);
  CHECK(one.stack.size() == 1);
  CHECK(one.towers.empty());

  // Harmonic (all-zero weights) spines come back unchanged.
  auto harmonic = convert(optimize_fixed_k(4.0, 4).design);
  REQUIRE(harmonic.success);
  CHECK(harmonic.stack.size() == 4);
  CHECK(is_balanced(harmonic.stack, BalanceMode::Exact).balanced);

  // Fractional total weight is rejected.
  auto frac = convert(optimize_fixed_k(10.5, 3).design);
  CHECK_FALSE(frac.success);
}

TEST_CASE("conversion report names the towers") {
  auto result = convert(optimize(100.0).design);
  auto text = conversion_report(result);
  CHECK(text.find("converted") != std::string::npos);
  CHECK(text.find("tower of") != std::string::npos);
}
