#include "overhang/parabolic.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace overhang {

namespace {

long long stack_block_count(int d) {
  return static_cast<long long>(d) * (d - 1) * (2 * d - 1) / 3 + 1;
}

// Blocks per row t (0 = bottom) of an r-slab.
int row_width(int r, int t) { return t % 2 == 0 ? r : r - 1; }

// Left edge of block j in an m-row, doubled so it is an integer.
long long left2_of(int m, int j) { return -m + 2LL * j; }

}  // namespace

Slab build_slab(int r, int base_level) {
  if (r < 2) throw std::invalid_argument("slab needs r >= 2");
  Slab s;
  s.r = r;
  s.base_level = base_level;
  for (int t = 0; t < 2 * r - 3; ++t) {
    int m = row_width(r, t);
    for (int j = 0; j < m; ++j)
      s.blocks.emplace_back(Rational(left2_of(m, j), 2), base_level + t);
  }
  return s;
}

ParabolicStack build_parabolic(int d) {
  if (d < 2) throw std::invalid_argument("parabolic stack needs d >= 2");
  ParabolicStack p;
  p.d = d;
  p.stack.name = "parabolic-" + std::to_string(d);
  p.stack.blocks.emplace_back(Rational(-1, 2), 0);
  int level = 1;
  for (int r = 2; r <= d; ++r) {
    Slab s = build_slab(r, level);
    p.stack.blocks.insert(p.stack.blocks.end(), s.blocks.begin(),
                          s.blocks.end());
    level += 2 * r - 3;
  }
  p.schedule = force_schedule(d);
  return p;
}

std::vector<SlabForceSchedule> force_schedule(int d) {
  if (d < 2) throw std::invalid_argument("schedule needs d >= 2");
  std::vector<SlabForceSchedule> sched;
  Rational g(0);
  for (int r = d; r >= 2; --r) {
    // Closed form for the same quantity; the recurrence must match it.
    Rational closed(0);
    for (int i = r; i <= d - 1; ++i) closed += Rational(i) * i;
    closed /= r;
    if (g != closed) throw std::logic_error("edge-force recurrence drifted");

    SlabForceSchedule e;
    e.r = r;
    e.g = g;
    e.g_prime = Rational(r) / (r - 1) * g + (r - 1);
    sched.push_back(e);
    g = e.g_prime;
  }
  return sched;
}

namespace {

// Point forces acting on one block's top (down) and bottom (up) edges,
// as (position, magnitude) pairs.
struct BlockForces {
  std::vector<std::pair<Rational, Rational>> down, up;
};

// Keyed by (row within the slab, doubled left edge).
using ForceMap = std::map<std::pair<int, long long>, BlockForces>;

struct Receiver {
  int block = 0;
  Rational mag;
};

// Applies a downward force at position p to an m-row: wholly to one block
// when p is a block interior or an outer edge, half to each neighbour
// when p is a shared edge. Returns who received what.
std::vector<Receiver> deposit_down(ForceMap& fm, int row, int m,
                                   const Rational& p, const Rational& mag) {
  long long p2 = numerator(Rational(p * 2)).convert_to<long long>();
  long long idx = p2 + m;  // 2j at block j's left edge, 2j+1 at its center
  std::vector<Receiver> rec;
  if (idx % 2 != 0) {
    rec.push_back({static_cast<int>((idx - 1) / 2), mag});
  } else {
    long long e = idx / 2;
    if (e == 0)
      rec.push_back({0, mag});
    else if (e == m)
      rec.push_back({m - 1, mag});
    else {
      rec.push_back({static_cast<int>(e - 1), mag / 2});
      rec.push_back({static_cast<int>(e), mag / 2});
    }
  }
  for (const Receiver& r : rec)
    fm[{row, left2_of(m, r.block)}].down.emplace_back(p, r.mag);
  return rec;
}

void add_up(ForceMap& fm, int row, int m, int block, const Rational& p,
            const Rational& mag) {
  fm[{row, left2_of(m, block)}].up.emplace_back(p, mag);
}

// Fills the per-block forces of an r-slab occupying rows base..base+2r-4
// under top load parameter g, following the inductive concentration
// argument. Returns the upward supports required under the bottom row.
std::vector<std::pair<Rational, Rational>> slab_forces(int r, const Rational& g,
                                                       int base, ForceMap& fm) {
  const int top = base + 2 * r - 4;
  // Top-row loads g, 2g, ..., 2g, g at the r + 1 edge positions.
  for (int i = 0; i <= r; ++i)
    deposit_down(fm, top, r, Rational(-r, 2) + i,
                 (i == 0 || i == r) ? g : g * 2);

  // Per-edge support under the bottom row: g' = r/(r-1) g + (r-1).
  Rational gp = Rational(r) / (r - 1) * g + (r - 1);
  std::vector<std::pair<Rational, Rational>> supports;
  for (int j = 0; j < r; ++j) {
    Rational c = Rational(-(r - 1), 2) + j;
    Rational mag = (j == 0 || j == r - 1) ? gp : gp * 2;
    add_up(fm, base, r, j, c, mag);
    supports.emplace_back(c, mag);
  }
  if (r == 2) return supports;  // a 2-slab is a single 2-row

  // The r equal forces 2(r-1)f + 1 balancing the top row split into a
  // load (r-2)f, 2(r-2)f, ..., (r-2)f concentrated by the inner
  // (r-1)-slab, and a remainder rf+1, 2f+1, ..., rf+1 passed straight
  // down to the bottom row.
  Rational f = g / (r - 1);
  for (int j = 0; j < r; ++j)
    add_up(fm, top, r, j, Rational(-(r - 1), 2) + j, (r - 1) * f * 2 + 1);

  auto inner = slab_forces(r - 1, (r - 2) * f, base + 1, fm);
  int n_in = static_cast<int>(inner.size());
  for (int i = 0; i < n_in; ++i) {
    const auto& [pos, mag] = inner[i];
    // Support i meets the bottom row at the edge shared by blocks i and
    // i+1. The outermost supports press wholly on their inner neighbour
    // (the end blocks carry no share); interior ones split evenly.
    if (i == 0)
      fm[{base, left2_of(r, 1)}].down.emplace_back(pos, mag);
    else if (i == n_in - 1)
      fm[{base, left2_of(r, r - 2)}].down.emplace_back(pos, mag);
    else {
      fm[{base, left2_of(r, i)}].down.emplace_back(pos, mag / 2);
      fm[{base, left2_of(r, i + 1)}].down.emplace_back(pos, mag / 2);
    }
  }

  for (int i = 0; i < r; ++i) {
    Rational p = Rational(-(r - 1), 2) + i;
    Rational mag = (i == 0 || i == r - 1) ? Rational(r * f + 1) : Rational(f * 2 + 1);
    for (int t = top - 1; t >= base; --t) {
      auto rec = deposit_down(fm, t, row_width(r, t - base), p, mag);
      if (t == base) break;
      bool end_column = (t - base) % 2 == 0 && (i == 0 || i == r - 1);
      if (end_column) {
        // The extra end blocks of the inner r-rows hang on this column;
        // each adds its own weight to the force it hands down.
        mag += 1;
        add_up(fm, t, r, rec[0].block, p, mag);
      } else {
        for (const Receiver& rc : rec)
          add_up(fm, t, row_width(r, t - base), rc.block, p, rc.mag);
      }
    }
  }
  return supports;
}

}  // namespace

bool verify_slab_balance(const Slab& slab, const Rational& g) {
  if (g < 0 || slab.r < 2) return false;
  ForceMap fm;
  slab_forces(slab.r, g, 0, fm);

  if (fm.size() != slab.blocks.size()) return false;
  for (const Block& b : slab.blocks) {
    if (!b.x_exact) return false;
    long long left2 = numerator(Rational(*b.x_exact * 2)).convert_to<long long>();
    auto it = fm.find({b.level - slab.base_level, left2});
    if (it == fm.end()) return false;
    const BlockForces& bf = it->second;

    Rational force(0), moment(0);
    for (const auto& [p, m] : bf.down) {
      if (m < 0) return false;
      force -= m;
      moment -= m * p;
    }
    for (const auto& [p, m] : bf.up) {
      if (m < 0) return false;
      force += m;
      moment += m * p;
    }
    Rational center = *b.x_exact + Rational(1, 2);
    if (force != 1 || moment != center) return false;
  }
  return true;
}

std::pair<Stack, std::vector<int>> build_modified_parabolic(int d) {
  if (d < 2) throw std::invalid_argument("modified stack needs d >= 2");
  Stack s;
  s.name = "modified-parabolic-" + std::to_string(d);
  std::vector<int> order;
  int level = 0;
  for (int r = 2; r <= d; ++r) {
    for (int t = 0; t < 2 * r - 3; ++t) {
      int m = row_width(r, t);
      int first = s.size();
      for (int j = 0; j < m; ++j)  // shifted half a block to the left
        s.blocks.emplace_back(Rational(left2_of(m, j) - 1, 2), level);
      // Center outward about the stack axis, left side first.
      if (m % 2 == 1) {
        int h = (m - 1) / 2;
        order.push_back(first + h);
        for (int k = 1; k <= h; ++k) {
          order.push_back(first + h - k);
          order.push_back(first + h + k);
        }
      } else {
        for (int k = 0; k < m / 2; ++k) {
          order.push_back(first + m / 2 - 1 - k);
          order.push_back(first + m / 2 + k);
        }
      }
      ++level;
    }
  }
  return {std::move(s), std::move(order)};
}

ParabolicFit best_parabolic_for(long long n) {
  if (n < 1) throw std::invalid_argument("need at least one block");
  int d = 1;
  while (stack_block_count(d + 1) <= n) ++d;

  ParabolicFit fit;
  fit.d = d;
  int pile_base = 0;
  if (d == 1) {
    fit.stack.name = "parabolic-fit-1";
    fit.stack.blocks.emplace_back(Rational(-1, 2), 0);
    pile_base = 1;
  } else {
    fit.stack = build_parabolic(d).stack;
    pile_base = (d - 1) * (d - 1) + 1;
  }
  // Leftover blocks go in a central pile on top; symmetric, so balance
  // is undisturbed.
  long long extra = n - fit.stack.size();
  for (long long i = 0; i < extra; ++i)
    fit.stack.blocks.emplace_back(Rational(-1, 2),
                                  pile_base + static_cast<int>(i));
  return fit;
}

}  // namespace overhang
