#include "overhang/spinal.hpp"

#include <cmath>
#include <stdexcept>

namespace overhang {

SpinalDesign balance_displacements(const std::vector<double>& weights) {
  SpinalDesign d;
  d.k = static_cast<int>(weights.size());
  d.weights = weights;
  d.loads.assign(d.k + 1, 0.0);
  d.displacements.assign(d.k, 0.0);
  for (int i = 0; i < d.k; ++i) {
    if (weights[i] < 0.0) throw std::invalid_argument("negative spine weight");
    d.loads[i + 1] = d.loads[i] + weights[i] + 1.0;
    d.displacements[i] = (weights[i] + 0.5) / d.loads[i + 1];
    d.overhang += d.displacements[i];
  }
  d.total_weight = d.loads[d.k];
  return d;
}

namespace {

// Runs the stationarity recurrence t_{i+1} = t_i^2 / (t_{i-1} + 1/2) from
// the given prefix, clamping each step to t_i + 1 (weight 0) when the
// recurrence would ask for a negative weight. Once a step clamps, all
// later steps clamp too, so zero weights form a suffix.
void forward(std::vector<double>& t, int from, int k) {
  for (int i = from; i < k; ++i) {
    double next = t[i] * t[i] / (t[i - 1] + 0.5);
    if (next < t[i] + 1.0) {  // clamped for good: a unit-weight tail
      for (int j = i + 1; j <= k; ++j) t[j] = t[j - 1] + 1.0;
      return;
    }
    t[i + 1] = next;
  }
}

SpinalOptimum design_from_loads(const std::vector<double>& t) {
  int k = static_cast<int>(t.size()) - 1;
  std::vector<double> w(k);
  for (int i = 0; i < k; ++i) w[i] = std::max(0.0, t[i + 1] - t[i] - 1.0);
  SpinalOptimum opt;
  opt.design = balance_displacements(w);
  opt.value = opt.design.overhang;
  opt.k_star = k;
  return opt;
}

}  // namespace

SpinalOptimum optimize_fixed_k(double w, int k, bool no_top_weight) {
  if (k < 1) throw std::invalid_argument("spine needs at least one block");
  if (w < k) throw std::invalid_argument("weight below block count");

  std::vector<double> t(k + 1);
  t[0] = 0.0;
  // Shooting parameter: t_1 normally, t_2 when the top weight is pinned.
  int shoot = no_top_weight ? 2 : 1;
  if (no_top_weight) t[1] = 1.0;
  if (shoot > k) {  // k = 1 with a pinned top: the harmonic single block
    t[1] = no_top_weight ? 1.0 : w;
    return design_from_loads(t);
  }

  // t_k as a function of the shooting value, without materializing the
  // whole sequence: once a step clamps, every later step clamps, so the
  // tail contributes k - i unit-weight blocks.
  double prev0 = shoot == 2 ? 1.0 : 0.0;
  auto t_end = [&](double start) {
    double prev = prev0, cur = start;
    for (int i = shoot; i < k; ++i) {
      if (cur > w) return cur + static_cast<double>(k - i);  // already past
      double next = cur * cur / (prev + 0.5);
      if (next < cur + 1.0) return cur + static_cast<double>(k - i);
      prev = cur;
      cur = next;
    }
    return cur;
  };

  double lo = no_top_weight ? 2.0 : 1.0, hi = w;
  for (int it = 0; it < 100 && hi - lo > 1e-13 * hi; ++it) {
    double mid = 0.5 * (lo + hi);
    (t_end(mid) < w ? lo : hi) = mid;
  }
  t[shoot] = 0.5 * (lo + hi);
  forward(t, shoot, k);
  t[k] = w;  // absorb the residual bisection error into the last weight
  return design_from_loads(t);
}

SpinalOptimum optimize(double w, bool no_top_weight) {
  if (w < 1.0) throw std::invalid_argument("weight must be at least 1");
  int kmax = static_cast<int>(std::floor(w));
  SpinalOptimum best;
  best.value = -1.0;
  for (int k = 1; k <= kmax; ++k) {
    SpinalOptimum cand = optimize_fixed_k(w, k, no_top_weight);
    if (cand.value > best.value) best = cand;
  }
  return best;
}

SpinalDesign sqrt_construction(double w) {
  if (w < 1.0) throw std::invalid_argument("weight must be at least 1");
  int k = static_cast<int>(std::floor(std::sqrt(w)));
  std::vector<double> weights(k);
  for (int i = 0; i < k; ++i) weights[i] = 2.0 * i;
  return balance_displacements(weights);
}

std::pair<double, double> log_bounds(double w) {
  return {std::log(w) - 1.313, std::log(w) + 1.0};
}

std::int64_t diamond_column_deficit(int m) {
  if (m < 1 || m > 62) throw std::invalid_argument("diamond size out of range");
  std::int64_t need = (std::int64_t{1} << m) - 1;  // t_m >= 2^m - 1
  std::int64_t have = std::int64_t{m} * m;
  return need > have ? need - have : 0;
}

Stack realize_spine(const SpinalDesign& design) {
  Stack s;
  s.name = "spinal-k" + std::to_string(design.k);
  // Right edge of block i (1-based, top-down) is sum_{j>=i} d_j; build
  // bottom-up so block 0 of the stack is the lowest.
  double right = 0.0;
  for (int i = design.k - 1; i >= 0; --i) {
    right += design.displacements[i];
    s.blocks.emplace_back(right - 1.0, design.k - 1 - i);
  }
  // s.blocks[k-1-i] now holds spine block i; attach its left-edge weight.
  for (int i = 0; i < design.k; ++i) {
    if (design.weights[i] <= 0.0) continue;
    int idx = design.k - 1 - i;
    s.weights.emplace_back(idx, s.blocks[idx].x, design.weights[i]);
  }
  return s;
}

}  // namespace overhang
