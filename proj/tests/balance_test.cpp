#include "doctest.h"
#include "overhang/balance.hpp"

using namespace overhang;

TEST_CASE("harmonic stacks balance in both modes") {
  for (int n : {1, 3, 10, 30}) {
    Stack s = make_harmonic(n);
    auto f = is_balanced(s, BalanceMode::Float);
    CHECK(f.balanced);
    CHECK(f.max_residual < 1e-8);

    auto e = is_balanced(s, BalanceMode::Exact);
    CHECK(e.balanced);
    CHECK(e.certified);
    CHECK(e.max_residual == 0.0);
    // The exact witness satisfies the equations exactly, so its float
    // image has only rounding-level residual.
    CHECK(witness_residual(s, e.witness) < 1e-9);
  }
}

TEST_CASE("perturbed harmonic stack collapses") {
  Stack s = make_harmonic(4);
  // Push the top block outward; the marginal stack tips over.
  s.blocks[3] = Block(*s.blocks[3].x_exact + Rational(1, 100), 3);
  auto f = is_balanced(s, BalanceMode::Float);
  CHECK_FALSE(f.balanced);
  auto e = is_balanced(s, BalanceMode::Exact);
  CHECK_FALSE(e.balanced);
  CHECK(e.certified);
  CHECK_FALSE(e.certificate_exact.empty());
}

TEST_CASE("inverted triangles: 2 balances, 3 does not") {
  auto t2 = is_balanced(make_inverted_triangle(2), BalanceMode::Exact);
  CHECK(t2.balanced);
  CHECK(t2.certified);

  auto t3 = is_balanced(make_inverted_triangle(3), BalanceMode::Exact);
  CHECK_FALSE(t3.balanced);
  CHECK(t3.certified);

  auto t3f = is_balanced(make_inverted_triangle(3), BalanceMode::Float);
  CHECK_FALSE(t3f.balanced);
  CHECK_FALSE(t3f.certificate.empty());
}

TEST_CASE("diamonds: 4 balances, 5 does not") {
  auto d4 = is_balanced(make_diamond(4), BalanceMode::Exact);
  CHECK(d4.balanced);
  CHECK(d4.certified);

  auto d5 = is_balanced(make_diamond(5), BalanceMode::Exact);
  CHECK_FALSE(d5.balanced);
  CHECK(d5.certified);
}

TEST_CASE("exact mode requires exact coordinates") {
  Stack s;
  s.blocks.emplace_back(-0.5, 0);
  s.blocks[0].x_exact.reset();
  CHECK_THROWS_AS(is_balanced(s, BalanceMode::Exact), UnsupportedMode);
}

TEST_CASE("a block fully beyond the table edge is unbalanced") {
  Stack s;
  s.blocks.emplace_back(Rational(0), 0);  // no table contact at all
  auto r = is_balanced(s, BalanceMode::Exact);
  CHECK_FALSE(r.balanced);
}

TEST_CASE("point weights can unbalance a stack") {
  Stack s;
  s.blocks.emplace_back(Rational(-3, 4), 0);
  auto base = is_balanced(s, BalanceMode::Exact);
  CHECK(base.balanced);

  // A big weight at the overhanging corner tips the block.
  s.weights.emplace_back(0, Rational(1, 4), Rational(10));
  auto loaded = is_balanced(s, BalanceMode::Exact);
  CHECK_FALSE(loaded.balanced);
}

TEST_CASE("witness_residual flags a wrong witness") {
  Stack s = make_harmonic(2);
  auto r = is_balanced(s, BalanceMode::Float);
  REQUIRE(r.balanced);
  auto bad = r.witness;
  bad[0].magnitude += 0.25;
  CHECK(witness_residual(s, bad) >= 0.25 - 1e-12);
}

TEST_CASE("minimum stabilizing weight for the 3-triangle") {
  Stack t3 = make_inverted_triangle(3);
  auto w = min_stabilizing_weight(t3);
  CHECK(w.total > 0.0);
  // Re-check balance with the weights attached.
  Stack loaded = t3;
  for (const auto& pw : w.placement) loaded.weights.push_back(pw);
  CHECK(is_balanced(loaded, BalanceMode::Float).balanced);

  // Slightly less total weight (scaled down) must not balance.
  Stack scaled = t3;
  for (auto pw : w.placement) {
    pw.magnitude *= 0.98;
    scaled.weights.push_back(pw);
  }
  CHECK_FALSE(is_balanced(scaled, BalanceMode::Float).balanced);
}

TEST_CASE("explicit placement sites restrict stabilization") {
  // A block three-quarters past the edge: a counterweight m at the left
  // corner needs 1/4 - m/4 <= 0, so the minimum is exactly 1.
  Stack s;
  s.blocks.emplace_back(Rational(-1, 4), 0);
  PlacementRule rule;
  rule.explicit_sites = {{0, -0.25}};
  auto w = min_stabilizing_weight(s, rule);
  CHECK(w.total == doctest::Approx(1.0));
  REQUIRE(w.placement.size() == 1);
  CHECK(w.placement[0].block == 0);
  CHECK(w.placement[0].position == doctest::Approx(-0.25));
}

TEST_CASE("stacks that no weight can save") {
  Stack s;
  s.blocks.emplace_back(Rational(0), 0);  // entirely past the edge
  CHECK_THROWS_AS(min_stabilizing_weight(s), Unstabilizable);
}

TEST_CASE("strict stability excludes marginal stacks") {
  CHECK_THROWS_AS(is_strictly_stable(make_harmonic(2), 0.0), std::invalid_argument);

  // A single block centered well inside the table is robust.
  Stack c;
  c.blocks.emplace_back(Rational(-1), 0);
  CHECK(is_strictly_stable(c, 0.4));

  // The harmonic stack is balanced only with edge resultants.
  CHECK(is_balanced(make_harmonic(2)).balanced);
  CHECK_FALSE(is_strictly_stable(make_harmonic(2), 0.05));
}

TEST_CASE("lp dump mentions every block") {
  Stack s = make_harmonic(2);
  std::string text = dump_lp(build_balance_lp(s));
  CHECK(text.find("force block 0") != std::string::npos);
  CHECK(text.find("moment block 1") != std::string::npos);
}
