#pragma once

#include <string>
#include <vector>

#include "overhang/model.hpp"
#include "overhang/spinal.hpp"

namespace overhang {

// A spinal design with all quantities rational: loads t_i are recovered
// from their (<= 12 fractional digit) decimal images and every derived
// quantity is computed exactly, so converted stacks can be certified.
struct SpineExact {
  int k = 0;
  std::vector<Rational> w;  // w[i], i = 0..k-1, top-down point weights
  std::vector<Rational> t;  // t[0] = 0 .. t[k] = total weight
  std::vector<Rational> d;  // displacements
  std::vector<Rational> x;  // left edge of spine block i (0 = top)
};

SpineExact rationalize_spine(const SpinalDesign& design);

// Shield block i sits on spine block i+1, alongside spine block i
// (1-based, top-down; block 0 is handled by finish_top). `u` at `z` is
// the downward force the shield above must apply to this shield; `v` is
// the integral external force at the left edge `y`.
struct ShieldLayer {
  int index = 0;
  Rational y, z, u, v;
};

struct ShieldResult {
  std::vector<ShieldLayer> layers;  // index 1..k-1
  bool complete = false;
  int fail_index = 0;       // meaningful when !complete
  std::string diagnostics;  // why placement stopped
};

// Bottom-up placement per the two-trigger heuristic; may stop early.
ShieldResult place_shields(const SpineExact& spine);

// A pile of `count` blocks whose centers share x = center, standing on
// level base_level.
struct Tower {
  Rational center;
  long long count = 0;
  int base_level = 0;
};

// One tower per nonzero external shield force.
std::vector<Tower> realize_towers(const SpineExact& spine,
                                  const std::vector<ShieldLayer>& layers);

// The top of the balancing set: the cap block B′_0 plus the top few
// shield layers, re-placed by a small feasibility LP. The heuristic's
// external forces inside the redesigned region are converted into piles
// whose positions the LP is free to choose, which usually absorbs them.
struct TopAssembly {
  int depth = 0;  // shield layers 1..depth were re-placed by the LP
  std::vector<ShieldLayer> relaid;  // their new y, z, u (v = 0)
  std::vector<Tower> piles;  // one per redesigned shield with extra load,
                             // plus the pile on the cap block
  // Realization of the surviving external forces as aligned block runs;
  // a run is cut wherever the tower must dodge a shield at its level.
  std::vector<Tower> tower_blocks;
  Rational y0;               // left edge of the cap block
  bool feasible = false;
  std::string note;
};

// Redesigns the top of a (possibly stalled) shield placement so the
// remaining forces are supplied by whole blocks only. Tries increasing
// depths and keeps the feasible assembly that leaves the fewest towers.
TopAssembly finish_top(const SpineExact& spine, const ShieldResult& shields);

struct ConversionResult {
  Stack stack;  // standard stack (no point weights) when success
  int placed_shields = 0;     // shields kept from the bottom-up heuristic
  std::vector<Tower> towers;  // one per surviving external shield force
  TopAssembly residual_top;
  bool success = false;
  std::string diagnostics;
};

// Full conversion of a loaded spinal design of integral total weight to a
// standard stack of exactly that many blocks; fails when the top cannot
// be finished (the weight 3, 5, 7 optima).
ConversionResult convert(const SpinalDesign& design);

// Per-layer y, z, u, v report.
std::string conversion_report(const ConversionResult& result);

}  // namespace overhang
