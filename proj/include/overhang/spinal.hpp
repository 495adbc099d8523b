#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "overhang/model.hpp"

namespace overhang {

// A spine of k blocks, top (principal) to bottom, with point weight w_i on
// the left edge of block i and d_i its displacement beyond the block below.
// loads[i] = t_i = sum_{j<=i} (1 + w_j) is the force block i passes down;
// loads[0] = 0 and loads[k] is the total weight.
struct SpinalDesign {
  int k = 0;
  std::vector<double> weights;        // w_1..w_k, index 0 is the top block
  std::vector<double> loads;          // t_0..t_k
  std::vector<double> displacements;  // d_1..d_k
  double total_weight = 0.0;
  double overhang = 0.0;
};

struct SpinalOptimum {
  SpinalDesign design;
  double value = 0.0;  // S*_k(w) or S*(w)
  int k_star = 0;
};

// Balance displacements d_i = (w_i + 1/2) / t_i for given weights.
SpinalDesign balance_displacements(const std::vector<double>& weights);

// Best spine of exactly k blocks and total weight w: solves the
// stationarity recurrence t_i^2 = (t_{i-1} + 1/2) t_{i+1} by shooting on
// t_1, with zero weights forced on a suffix when the recurrence would
// demand a negative weight. `no_top_weight` pins w_1 = 0.
SpinalOptimum optimize_fixed_k(double w, int k, bool no_top_weight = false);

// S*(w): maximum of optimize_fixed_k over k = 1..floor(w), smallest k on
// ties.
SpinalOptimum optimize(double w, bool no_top_weight = false);

// The explicit construction with k = floor(sqrt(w)) blocks and
// w_i = 2(i-1): total weight k^2 <= w, overhang > ln w - 1.313.
SpinalDesign sqrt_construction(double w);

// (ln w - 1.313, ln w + 1), a proven sandwich for S*(w).
std::pair<double, double> log_bounds(double w);

// Blocks a column on the top of an m-diamond must contain to balance it:
// max(0, 2^m - m^2 - 1), from the spine recurrence t_i = 2 t_{i-1} + 1.
std::int64_t diamond_column_deficit(int m);

// Concrete loaded stack: spine blocks placed with the design's
// displacements, right edge of the bottom block at d_k, point weights at
// left edges.
Stack realize_spine(const SpinalDesign& design);

}  // namespace overhang
