#pragma once

#include <utility>
#include <vector>

#include "overhang/model.hpp"

namespace overhang {

// A band of alternating r-rows and (r-1)-rows (2r-3 rows in total,
// starting and finishing with r-rows), every row centered on x = 0.
// Contains 2(r-1)^2 blocks.
struct Slab {
  int r = 0;
  int base_level = 0;
  std::vector<Block> blocks;  // bottom-up, left-to-right within a row
};

// The edge-force recurrence tying consecutive slabs together: a slab
// loaded with g, 2g, ..., 2g, g down its top-row edges needs
// g', 2g', ..., 2g', g' up under its bottom row, g' = r/(r-1) g + (r-1).
struct SlabForceSchedule {
  int r = 0;
  Rational g;        // per-edge load on the slab's top row
  Rational g_prime;  // per-edge support required under its bottom row
};

// A d-slab on a (d-1)-slab on ... on a 2-slab on a single block:
// d(d-1)(2d-1)/3 + 1 blocks, overhang d/2 past the table edge at x = 0.
struct ParabolicStack {
  int d = 0;
  Stack stack;
  std::vector<SlabForceSchedule> schedule;  // r = d down to 2
};

Slab build_slab(int r, int base_level);

ParabolicStack build_parabolic(int d);

// Schedule for slabs r = d down to 2, seeded with g(d) = 0. Each g is
// cross-checked against the closed form (1/r) * sum_{i=r}^{d-1} i^2.
std::vector<SlabForceSchedule> force_schedule(int d);

// Builds the explicit per-block force assignment that concentrates the
// top load g (plus the slab's own weight) onto its bottom row, and checks
// every block's force and moment equations exactly.
bool verify_slab_balance(const Slab& slab, const Rational& g);

// The incremental variant: the lowest block is omitted and everything
// shifts half a block left, so the stack can be laid one block at a
// time. Returns the stack plus a laying order (indices into blocks)
// going row by row from the center outward, left side first; every
// prefix of the order is balanced.
std::pair<Stack, std::vector<int>> build_modified_parabolic(int d);

// Largest full stack fitting in n blocks, with the leftover blocks piled
// vertically at the center of the top row. Achieves overhang d/2 where
// d(d-1)(2d-1)/3 + 1 <= n.
struct ParabolicFit {
  int d = 0;
  Stack stack;
};
ParabolicFit best_parabolic_for(long long n);

}  // namespace overhang
