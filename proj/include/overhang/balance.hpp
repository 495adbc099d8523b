#pragma once

#include <string>
#include <vector>

#include "overhang/lp.hpp"
#include "overhang/model.hpp"
#include "overhang/rational.hpp"

namespace overhang {

struct UnsupportedMode : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Unstabilizable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Resultant force at one endpoint of a contact interval.
struct ForceVar {
  Contact contact;
  int end = 0;  // 0 -> endpoint a, 1 -> endpoint b
  double magnitude = 0.0;
  std::optional<Rational> magnitude_exact;
};

struct BalanceResult {
  bool balanced = false;
  bool certified = false;  // exact-mode verdict
  std::vector<ForceVar> witness;
  // Farkas multipliers over the 2n equilibrium rows (force row then
  // moment row per block) proving infeasibility.
  std::vector<double> certificate;
  std::vector<Rational> certificate_exact;
  double max_residual = 0.0;
};

enum class BalanceMode { Float, Exact };

// The equilibrium system of Theorem-style force/moment rows: two rows per
// block, two nonnegative variables per contact (variables 2k and 2k+1 are
// the endpoint forces of contact k). The table has no rows.
struct BalanceLp {
  LpProblem<double> lp;
  std::vector<Contact> contact_list;
};
struct BalanceLpExact {
  LpProblem<Rational> lp;
  std::vector<Contact> contact_list;
};

BalanceLp build_balance_lp(const Stack& stack);
// Requires exact coordinates throughout; throws UnsupportedMode otherwise.
BalanceLpExact build_balance_lp_exact(const Stack& stack);

BalanceResult is_balanced(const Stack& stack, BalanceMode mode = BalanceMode::Float,
                          double tol = 1e-9);

// Maximum violation of the force/moment equations by a witness.
double witness_residual(const Stack& stack, const std::vector<ForceVar>& witness);

struct PlacementRule {
  // Default: weights may sit anywhere on a block's upper edge outside the
  // contact intervals of the blocks resting on it.
  bool upper_edges_outside_contacts = true;
  // When non-empty, the only admissible (block, position) sites.
  std::vector<std::pair<int, double>> explicit_sites;
};

struct StabilizingWeights {
  double total = 0.0;
  std::vector<PointWeight> placement;
};

// Minimum total point-weight mass that balances the stack; throws
// Unstabilizable when no finite mass works.
StabilizingWeights min_stabilizing_weight(const Stack& stack,
                                          const PlacementRule& rule = {});

// Balance with every contact resultant at least `margin` (absolute x
// distance) inside its contact interval.
bool is_strictly_stable(const Stack& stack, double margin, double tol = 1e-9);

// Human-readable dump of an equilibrium system, for debugging.
std::string dump_lp(const BalanceLp& built);

}  // namespace overhang
