#include <cmath>

#include "doctest.h"
#include "overhang/balance.hpp"
#include "overhang/spinal.hpp"

using namespace overhang;

namespace {

double harmonic_sum(int n) {
  double h = 0.0;
  for (int i = 1; i <= n; ++i) h += 1.0 / i;
  return h;
}

}  // namespace

TEST_CASE("zero weights give the harmonic displacements") {
  auto d = balance_displacements(std::vector<double>(8, 0.0));
  for (int i = 1; i <= 8; ++i) {
    CHECK(d.loads[i] == doctest::Approx(i));
    CHECK(d.displacements[i - 1] == doctest::Approx(1.0 / (2 * i)));
  }
  CHECK(d.overhang == doctest::Approx(harmonic_sum(8) / 2));
  CHECK_THROWS_AS(balance_displacements({1.0, -0.5}), std::invalid_argument);
}

TEST_CASE("arithmetic weights 2(i-1) give square loads") {
  std::vector<double> w(10);
  for (int i = 0; i < 10; ++i) w[i] = 2.0 * i;
  auto d = balance_displacements(w);
  for (int i = 1; i <= 10; ++i) {
    CHECK(d.loads[i] == doctest::Approx(i * i));
    CHECK(d.displacements[i - 1] ==
          doctest::Approx(2.0 / i - 1.5 / (i * i)));
  }
  CHECK(d.total_weight == doctest::Approx(100.0));
}

TEST_CASE("fixed-k optimum for weight 3, two blocks") {
  auto opt = optimize_fixed_k(3.0, 2);
  // Closed form (11 - 2 sqrt 6) / 6.
  CHECK(opt.value == doctest::Approx((11.0 - 2.0 * std::sqrt(6.0)) / 6.0).epsilon(1e-9));
  CHECK(opt.design.loads[1] == doctest::Approx(std::sqrt(1.5)).epsilon(1e-9));
}

TEST_CASE("no spare weight reduces to the harmonic stack") {
  for (int k : {1, 2, 5, 9}) {
    auto opt = optimize_fixed_k(static_cast<double>(k), k);
    CHECK(opt.value == doctest::Approx(harmonic_sum(k) / 2).epsilon(1e-9));
    for (double wi : opt.design.weights) CHECK(wi == doctest::Approx(0.0));
  }
  CHECK_THROWS_AS(optimize_fixed_k(3.0, 4), std::invalid_argument);
}

TEST_CASE("stationarity holds at interior indices with positive weights") {
  auto opt = optimize_fixed_k(100.0, 10);
  const auto& t = opt.design.loads;
  for (int i = 1; i < 10; ++i) {
    if (opt.design.weights[i - 1] > 0 && opt.design.weights[i] > 0)
      CHECK(t[i] * t[i] - (t[i - 1] + 0.5) * t[i + 1] ==
            doctest::Approx(0.0).epsilon(1e-8));
  }
  // The sqrt profile is feasible at (w, k) = (100, 10), so the optimum
  // cannot fall below its overhang.
  double sqrt_value = 0.0;
  for (int i = 1; i <= 10; ++i) sqrt_value += 2.0 / i - 1.5 / (i * i);
  CHECK(opt.value >= sqrt_value - 1e-9);
}

TEST_CASE("zero weights form a suffix") {
  for (auto [w, k] : {std::pair{10.0, 8}, {12.5, 11}, {30.0, 20}}) {
    auto opt = optimize_fixed_k(w, k);
    bool seen_zero = false;
    for (double wi : opt.design.weights) {
      if (wi == 0.0) seen_zero = true;
      else CHECK_FALSE(seen_zero);
    }
  }
}

TEST_CASE("k-scan reproduces the weight-100 optimum") {
  auto opt = optimize(100.0);
  CHECK(opt.value == doctest::Approx(3.6979).epsilon(1e-3));
  CHECK(opt.k_star == opt.design.k);
  CHECK(opt.design.total_weight == doctest::Approx(100.0));

  CHECK(optimize(1.0).value == doctest::Approx(0.5));
  CHECK_THROWS_AS(optimize(0.5), std::invalid_argument);
}

TEST_CASE("optimum sits inside the log sandwich and grows with weight") {
  double prev = 0.0;
  for (double w : {2.0, 5.0, 10.0, 100.0}) {
    auto [lower, upper] = log_bounds(w);
    double v = optimize(w).value;
    CHECK(v > lower);
    CHECK(v < upper);
    CHECK(v >= prev);
    prev = v;
    CHECK(sqrt_construction(w).overhang <= v + 1e-9);
  }
}

TEST_CASE("sqrt construction values") {
  auto d = sqrt_construction(100.0);
  CHECK(d.k == 10);
  CHECK(d.loads[10] == doctest::Approx(100.0));
  CHECK(d.overhang == doctest::Approx(3.5332).epsilon(1e-3));

  auto d4 = sqrt_construction(4.0);
  CHECK(d4.k == 2);
  CHECK(d4.overhang == doctest::Approx(0.5 + 2.5 / 4.0));

  auto d1 = sqrt_construction(1.0);
  CHECK(d1.k == 1);
  CHECK(d1.overhang == doctest::Approx(0.5));
}

TEST_CASE("diamond column deficits") {
  CHECK(diamond_column_deficit(4) == 0);
  CHECK(diamond_column_deficit(5) == 6);
  CHECK(diamond_column_deficit(6) == 27);
  CHECK(diamond_column_deficit(1) == 0);
  CHECK_THROWS_AS(diamond_column_deficit(0), std::invalid_argument);
}

TEST_CASE("realized spines pass the balance LP, perturbed ones fail") {
  for (double w : {5.0, 25.0}) {
    auto design = optimize(w).design;
    Stack s = realize_spine(design);
    CHECK(s.size() == design.k);
    CHECK(overhang::overhang(s) == doctest::Approx(design.overhang));
    CHECK(is_balanced(s).balanced);

    // Nudging any one displacement upward breaks balance.
    for (int i = 0; i < design.k; ++i) {
      auto bad = design;
      bad.displacements[i] += 1e-4;
      CHECK_FALSE(is_balanced(realize_spine(bad)).balanced);
    }
  }
}

TEST_CASE("pinned top weight matches the paper's loaded 3-stack spine") {
  auto opt = optimize_fixed_k(3.0, 2, true);
  CHECK(opt.design.weights[0] == 0.0);
  CHECK(opt.design.loads[1] == doctest::Approx(1.0));
  CHECK(opt.design.weights[1] == doctest::Approx(1.0));
  CHECK(opt.value == doctest::Approx(0.5 + 1.5 / 3.0));
  // The unconstrained optimum is strictly better.
  CHECK(optimize_fixed_k(3.0, 2).value > opt.value);
}
