#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "overhang/balance.hpp"
#include "overhang/model.hpp"

namespace overhang {

// One row of a brick wall: `width` unit blocks starting at `left`, which
// lives on the half-integer grid.
struct BrickWallLevel {
  Rational left;
  int width = 1;

  BrickWallLevel() = default;
  BrickWallLevel(Rational l, int w) : left(std::move(l)), width(w) {}
  Rational right() const { return left + width; }
};

// Contiguous rows, bottom-up, each row offset half a block from the row
// beneath: both ends move by exactly half a block per level, so every
// block rests on the row below and none is buried alive with nothing
// above it to hand its load to. A single block rests on the table.
// Symmetric profiles are mirror images about x = 0.
struct BrickWallProfile {
  std::vector<BrickWallLevel> levels;
  bool symmetric = true;
};

// Throws std::invalid_argument when a profile breaks the rules above.
void validate_profile(const BrickWallProfile& p);

// Right edge of the rightmost block, measured from the table edge.
Rational profile_overhang(const BrickWallProfile& p);

// The profile's blocks (no point weights), level by level, left to right.
Stack realize_profile(const BrickWallProfile& p);

// a + b w, where w is the total weight of the loaded stack.
struct Affine {
  Rational a, b;
  Rational at(const Rational& w) const { return a + b * w; }
};

enum class ForceKind { Table, Contact, PointWeight };

// One downward force of the assignment, as magnitude and moment about
// x = 0 (both affine in w). Fixed-position forces act at block edges;
// free-position forces act at moment/magnitude, which must fall in
// [lo, hi].
struct WellBehavedForce {
  ForceKind kind = ForceKind::Contact;
  int lower = kTable;  // block the force presses on (kTable: table's reaction)
  int upper = kTable;  // block pressing down; kTable for weights and the table
  Affine mag;
  Affine moment;
  bool free_position = false;
  Rational lo, hi;
};

struct WellBehavedAssignment {
  std::vector<WellBehavedForce> forces;
};

// Solves every block's force and moment equations from the table up: the
// table pushes w at the highest point it can reach, blocks covered on
// both top corners shed their load at their two edges, protruding blocks
// hand a single force to the one block above them, and whatever the top
// layer cannot pass on becomes its point weights. In asymmetric mode,
// left-protruding blocks below the top also take a point weight at their
// left edge instead of acting as props.
WellBehavedAssignment propagate_well_behaved(const BrickWallProfile& p);

// Smallest total weight making every force magnitude nonnegative and
// every free position land inside its window; +infinity when no weight
// does.
double min_weight_for_profile(const BrickWallProfile& p);

// Double-precision screening version of min_weight_for_profile, used
// inside the local search; the search winner is re-certified exactly.
double min_weight_for_profile_fast(const BrickWallProfile& p);

// Smallest constraint slack of the assignment at total weight w
// (negative when some force is negative or out of its window).
double min_assignment_slack(const WellBehavedAssignment& a, double w);

// The loaded stack at total weight w: blocks plus the instantiated point
// weights.
Stack instantiate_profile(const BrickWallProfile& p, const Rational& w);

// The assignment at weight w, decomposed onto contact endpoints; a
// feasible balance witness for instantiate_profile(p, w) when w >= w*.
std::vector<ForceVar> profile_witness(const BrickWallProfile& p, const Rational& w);

// Straight-sided pyramid from a single table block up to the target
// overhang: the canonical search seed.
BrickWallProfile seed_profile(double target_overhang);

struct BrickWallResult {
  BrickWallProfile profile;
  double weight = 0.0;
};

// First-improvement local search over profiles reaching the target:
// widen or narrow a row by one block (per side when symmetric, per end
// otherwise), add or remove a layer at the top or the bottom. Stops at a
// 1-move optimum; deterministic.
BrickWallResult local_search_brickwall(double target_overhang, bool symmetric,
                                       std::optional<BrickWallProfile> seed = std::nullopt);

// Boundary polyline of the profile (up the right side, down the left),
// with both coordinates divided by the overhang.
std::vector<std::pair<double, double>> scaled_outline(const BrickWallProfile& p);

}  // namespace overhang
