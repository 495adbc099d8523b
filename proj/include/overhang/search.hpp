#pragma once

#include <vector>

#include "overhang/model.hpp"

namespace overhang {

// Which blocks rest on which, and in what order. Blocks are grouped into
// levels bottom-up; within a level they are ordered left to right, and
// each rests on a consecutive run of the level below (disjoint unit
// intervals make non-consecutive supporters geometrically impossible).
// Level 0 rests on the table. Mirror images are distinct structures,
// since overhang is directional.
struct SupportRun {
  int first = 0, last = 0;  // inclusive indices into the level below
};

struct CombinatorialStructure {
  std::vector<int> level_counts;                  // bottom-up
  std::vector<std::vector<SupportRun>> supports;  // supports[l-1][j] for level l
  int size() const;
};

// Every canonical structure with n blocks, exactly once. Desk-scale
// only: n > 7 is refused (the count explodes).
std::vector<CombinatorialStructure> enumerate_structures(int n);

struct StructureOptimum {
  bool feasible = false;
  double overhang = 0.0;
  Stack stack;
};

// Multi-start local maximization of overhang over the block coordinates,
// with balance enforced through a stabilizing-mass penalty. Deterministic
// for a fixed seed.
StructureOptimum optimize_structure(const CombinatorialStructure& s,
                                    int starts = 20, unsigned seed = 1);

struct SearchOptimum {
  double overhang = 0.0;
  Stack stack;
  CombinatorialStructure structure;
};

// Max over enumerate_structures of optimize_structure: the empirical
// n-block optimum. Cheap first pass over all structures, then the
// leaders are re-optimized with the full start budget.
SearchOptimum exhaustive_D(int n);

}  // namespace overhang
