#include "overhang/brickwall.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace overhang {

namespace {

Rational half() { return Rational(1, 2); }

bool on_half_grid(const Rational& x) { return denominator(Rational(x * 2)) == 1; }

Rational abs_r(const Rational& x) { return x < 0 ? Rational(-x) : x; }

}  // namespace

void validate_profile(const BrickWallProfile& p) {
  if (p.levels.empty()) throw std::invalid_argument("profile has no levels");
  if (p.levels[0].width != 1)
    throw std::invalid_argument("exactly one block may rest on the table");
  if (!(p.levels[0].left < 0))
    throw std::invalid_argument("the bottom block must overlap the table");
  for (size_t l = 0; l < p.levels.size(); ++l) {
    const BrickWallLevel& lv = p.levels[l];
    if (lv.width < 1) throw std::invalid_argument("empty row");
    if (!on_half_grid(lv.left))
      throw std::invalid_argument("row ends must sit on the half-integer grid");
    if (l > 0) {
      if (abs_r(lv.left - p.levels[l - 1].left) != half() ||
          abs_r(lv.right() - p.levels[l - 1].right()) != half())
        throw std::invalid_argument(
            "row ends must move by exactly half a block per level");
    }
    if (p.symmetric && lv.left != -lv.right())
      throw std::invalid_argument("profile marked symmetric is not");
  }
}

Rational profile_overhang(const BrickWallProfile& p) {
  Rational r = p.levels[0].right();
  for (const auto& lv : p.levels) r = std::max(r, lv.right());
  return r;
}

Stack realize_profile(const BrickWallProfile& p) {
  validate_profile(p);
  Stack s;
  s.name = "brickwall";
  for (size_t l = 0; l < p.levels.size(); ++l)
    for (int j = 0; j < p.levels[l].width; ++j)
      s.blocks.emplace_back(Rational(p.levels[l].left + j), static_cast<int>(l));
  return s;
}

namespace {

Affine operator+(const Affine& x, const Affine& y) { return {x.a + y.a, x.b + y.b}; }
Affine operator-(const Affine& x, const Affine& y) { return {x.a - y.a, x.b - y.b}; }
Affine operator*(const Rational& c, const Affine& x) { return {c * x.a, c * x.b}; }

struct Grid {
  std::vector<int> first;  // global index of each level's leftmost block
  int n = 0;
};

Grid make_grid(const BrickWallProfile& p) {
  Grid g;
  for (const auto& lv : p.levels) {
    g.first.push_back(g.n);
    g.n += lv.width;
  }
  return g;
}

// Index of the row-above block whose span contains q (strictly interior;
// q is always a lower block's edge, offset half a block from the row
// above, so containment is never ambiguous).
int containing(const BrickWallLevel& above, const Rational& q) {
  Rational d2 = Rational((q - above.left) * 2);
  long long num = numerator(d2).convert_to<long long>();
  if (num <= 0 || num % 2 == 0 || (num - 1) / 2 >= above.width)
    throw std::logic_error("edge not covered by the row above");
  return static_cast<int>((num - 1) / 2);
}

}  // namespace

WellBehavedAssignment propagate_well_behaved(const BrickWallProfile& p) {
  validate_profile(p);
  Grid g = make_grid(p);
  std::vector<Affine> upF(g.n, {Rational(0), Rational(0)});
  std::vector<Affine> upM(g.n, {Rational(0), Rational(0)});
  WellBehavedAssignment out;

  // The table carries the whole weight at the rightmost point of its
  // contact with the bottom block.
  Rational table_pos = std::min(Rational(0), p.levels[0].right());
  upF[0] = {Rational(0), Rational(1)};
  upM[0] = {Rational(0), table_pos};
  out.forces.push_back({ForceKind::Table, kTable, 0, upF[0], upM[0], false,
                        table_pos, table_pos});

  const int top = static_cast<int>(p.levels.size()) - 1;
  for (int l = 0; l <= top; ++l) {
    for (int j = 0; j < p.levels[l].width; ++j) {
      int b = g.first[l] + j;
      Rational xl = p.levels[l].left + j, xr = xl + 1;
      Rational center = xl + half();
      Affine sumF = upF[b] - Affine{Rational(1), Rational(0)};
      Affine sumM = upM[b] - Affine{center, Rational(0)};

      if (l == top) {
        out.forces.push_back(
            {ForceKind::PointWeight, b, kTable, sumF, sumM, true, xl, xr});
        continue;
      }

      const BrickWallLevel& above = p.levels[l + 1];
      bool cov_l = above.left < xl && above.right() > xl;
      bool cov_r = above.right() > xr && above.left < xr;

      auto shed = [&](const Rational& p1, ForceKind k1, const Rational& p2) {
        // Two downward forces at known positions p2 - p1 = 1 apart.
        Affine f2 = sumM - p1 * sumF;
        Affine f1 = sumF - f2;
        if (k1 == ForceKind::Contact) {
          int a1 = g.first[l + 1] + containing(above, p1);
          out.forces.push_back({k1, b, a1, f1, p1 * f1, false, p1, p1});
          upF[a1] = upF[a1] + f1;
          upM[a1] = upM[a1] + p1 * f1;
        } else {
          out.forces.push_back({k1, b, kTable, f1, p1 * f1, false, p1, p1});
        }
        int a2 = g.first[l + 1] + containing(above, p2);
        out.forces.push_back(
            {ForceKind::Contact, b, a2, f2, p2 * f2, false, p2, p2});
        upF[a2] = upF[a2] + f2;
        upM[a2] = upM[a2] + p2 * f2;
      };

      if (cov_l && cov_r) {
        shed(xl, ForceKind::Contact, xr);
      } else if (!cov_l && cov_r && !p.symmetric) {
        // Left-protruding splitter: point weight on the free corner.
        shed(xl, ForceKind::PointWeight, xr);
      } else {
        // Prop: a single force, position free within the overlap with
        // the one block above.
        Rational lo = std::max(xl, above.left), hi = std::min(xr, above.right());
        int a = g.first[l + 1] +
                static_cast<int>(std::floor(to_double((lo + hi) / 2 - above.left)));
        out.forces.push_back({ForceKind::Contact, b, a, sumF, sumM, true, lo, hi});
        upF[a] = upF[a] + sumF;
        upM[a] = upM[a] + sumM;
      }
    }
  }
  return out;
}

namespace {

// Collects every nonnegativity and position-window requirement as an
// affine expression that must be >= 0.
std::vector<Affine> assignment_constraints(const WellBehavedAssignment& a) {
  std::vector<Affine> cs;
  for (const auto& f : a.forces) {
    cs.push_back(f.mag);
    if (f.free_position) {
      cs.push_back(f.moment - f.lo * f.mag);
      cs.push_back(f.hi * f.mag - f.moment);
    }
  }
  return cs;
}

}  // namespace

double min_weight_for_profile(const BrickWallProfile& p) {
  auto a = propagate_well_behaved(p);
  bool have_lower = false, have_upper = false;
  Rational lower(0), upper(0);
  for (const Affine& c : assignment_constraints(a)) {
    if (c.b > 0) {
      Rational bound = Rational(-c.a / c.b);
      if (!have_lower || bound > lower) lower = bound;
      have_lower = true;
    } else if (c.b < 0) {
      Rational bound = Rational(-c.a / c.b);
      if (!have_upper || bound < upper) upper = bound;
      have_upper = true;
    } else if (c.a < 0) {
      return std::numeric_limits<double>::infinity();
    }
  }
  if (!have_lower) lower = Rational(realize_profile(p).size());
  if (have_upper && lower > upper)
    return std::numeric_limits<double>::infinity();
  return to_double(lower);
}

double min_assignment_slack(const WellBehavedAssignment& a, double w) {
  double slack = std::numeric_limits<double>::infinity();
  for (const Affine& c : assignment_constraints(a))
    slack = std::min(slack, to_double(c.a) + to_double(c.b) * w);
  return slack;
}

Stack instantiate_profile(const BrickWallProfile& p, const Rational& w) {
  Stack s = realize_profile(p);
  auto a = propagate_well_behaved(p);
  for (const auto& f : a.forces) {
    if (f.kind != ForceKind::PointWeight) continue;
    Rational mag = f.mag.at(w);
    if (mag == 0) continue;
    Rational pos = f.free_position ? Rational(f.moment.at(w) / mag) : f.lo;
    s.weights.emplace_back(f.lower, pos, mag);
  }
  return s;
}

std::vector<ForceVar> profile_witness(const BrickWallProfile& p, const Rational& w) {
  Stack s = instantiate_profile(p, w);
  auto a = propagate_well_behaved(p);
  std::map<std::pair<int, int>, Contact> by_pair;
  for (const Contact& c : contacts(s)) by_pair[{c.upper, c.lower}] = c;

  std::vector<ForceVar> witness;
  for (const auto& f : a.forces) {
    if (f.kind == ForceKind::PointWeight) continue;
    // Table records carry the supported block in `upper`; contacts press
    // from `upper` onto `lower`.
    std::pair<int, int> key = f.kind == ForceKind::Table
                                  ? std::make_pair(f.upper, kTable)
                                  : std::make_pair(f.upper, f.lower);
    auto it = by_pair.find(key);
    if (it == by_pair.end()) throw std::logic_error("force without a contact");
    const Contact& c = it->second;
    Rational mag = f.mag.at(w);
    Rational pos = f.free_position && mag != 0 ? Rational(f.moment.at(w) / mag)
                                               : f.lo;
    Rational span = *c.b_exact - *c.a_exact;
    Rational fb = Rational(mag * (pos - *c.a_exact) / span);
    Rational fa = mag - fb;
    for (int end = 0; end < 2; ++end) {
      ForceVar v;
      v.contact = c;
      v.end = end;
      v.magnitude_exact = end == 0 ? fa : fb;
      v.magnitude = to_double(*v.magnitude_exact);
      witness.push_back(std::move(v));
    }
  }
  return witness;
}

BrickWallProfile seed_profile(double target_overhang) {
  if (target_overhang < 0.5)
    throw std::invalid_argument("overhang targets below 1/2 are unreachable");
  BrickWallProfile p;
  p.symmetric = true;
  Rational e = half();
  p.levels.emplace_back(Rational(-e), 1);
  // Flare two steps out, one step in: a straight maximal-slope pyramid
  // forces every boundary block to halve its outward flux, so its weight
  // grows like 2^height; the gentler flare stays affordable.
  int k = 0;
  while (to_double(e) < target_overhang - 1e-12) {
    e += k % 3 == 2 ? -half() : half();
    ++k;
    p.levels.emplace_back(Rational(-e), static_cast<int>(2 * to_double(e) + 0.5));
  }
  return p;
}

namespace {

// The search works on a plain-integer mirror of the profile — twice the
// left edge plus the width per row — so candidate generation, validation
// and screening never touch rational arithmetic.
struct IRow {
  long long l2;  // 2 * left
  int w;
  long long r2() const { return l2 + 2 * w; }
};

std::vector<IRow> to_rows(const BrickWallProfile& p) {
  std::vector<IRow> rows;
  for (const auto& lv : p.levels)
    rows.push_back(
        {numerator(Rational(lv.left * 2)).convert_to<long long>(), lv.width});
  return rows;
}

BrickWallProfile from_rows(const std::vector<IRow>& rows, bool symmetric) {
  BrickWallProfile p;
  p.symmetric = symmetric;
  for (const IRow& r : rows) p.levels.emplace_back(Rational(r.l2, 2), r.w);
  return p;
}

bool rows_valid(const std::vector<IRow>& rows, bool symmetric) {
  if (rows.empty() || rows[0].w != 1 || rows[0].l2 >= 0) return false;
  for (size_t l = 0; l < rows.size(); ++l) {
    if (rows[l].w < 1) return false;
    if (l > 0 && (std::abs(rows[l].l2 - rows[l - 1].l2) != 1 ||
                  std::abs(rows[l].r2() - rows[l - 1].r2()) != 1))
      return false;
    if (symmetric && rows[l].l2 != -rows[l].r2()) return false;
  }
  return true;
}

long long rows_overhang2(const std::vector<IRow>& rows) {
  long long r = rows[0].r2();
  for (const IRow& row : rows) r = std::max(r, row.r2());
  return r;
}

// Integer-row port of the double-precision screening propagation.
double min_weight_rows(const std::vector<IRow>& rows, bool symmetric) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const int L = static_cast<int>(rows.size());
  std::vector<int> first(L);
  int n = 0;
  for (int l = 0; l < L; ++l) {
    first[l] = n;
    n += rows[l].w;
  }
  std::vector<double> upFa(n, 0.0), upFb(n, 0.0);
  std::vector<double> upMa(n, 0.0), upMb(n, 0.0);
  double lower = static_cast<double>(n), upper = kInf;
  auto mag = [&](double a, double b) {
    if (b > 1e-12) lower = std::max(lower, -a / b);
    else if (b < -1e-12) upper = std::min(upper, -a / b);
    else if (a < -1e-7) lower = kInf;
  };

  double table_pos = std::min(0.0, rows[0].l2 / 2.0 + 1);
  upFb[0] = 1.0;
  upMb[0] = table_pos;

  const int top = L - 1;
  for (int l = 0; l <= top && lower <= upper; ++l) {
    double row_left = rows[l].l2 / 2.0;
    for (int j = 0; j < rows[l].w; ++j) {
      int b = first[l] + j;
      double xl = row_left + j, xr = xl + 1;
      double sFa = upFa[b] - 1.0, sFb = upFb[b];
      double sMa = upMa[b] - (xl + 0.5), sMb = upMb[b];

      if (l == top) {
        mag(sFa, sFb);
        mag(sMa - xl * sFa, sMb - xl * sFb);
        mag(xr * sFa - sMa, xr * sFb - sMb);
        continue;
      }

      double al = rows[l + 1].l2 / 2.0, ar = al + rows[l + 1].w;
      bool cov_l = al < xl && ar > xl;
      bool cov_r = ar > xr && al < xr;

      auto shed = [&](double p1, bool p1_contact, double p2) {
        double f2a = sMa - p1 * sFa, f2b = sMb - p1 * sFb;
        double f1a = sFa - f2a, f1b = sFb - f2b;
        mag(f1a, f1b);
        mag(f2a, f2b);
        if (p1_contact) {
          int a1 = first[l + 1] + static_cast<int>(std::floor(p1 - al));
          upFa[a1] += f1a;
          upFb[a1] += f1b;
          upMa[a1] += p1 * f1a;
          upMb[a1] += p1 * f1b;
        }
        int a2 = first[l + 1] + static_cast<int>(std::floor(p2 - al));
        upFa[a2] += f2a;
        upFb[a2] += f2b;
        upMa[a2] += p2 * f2a;
        upMb[a2] += p2 * f2b;
      };

      if (cov_l && cov_r) {
        shed(xl, true, xr);
      } else if (!cov_l && cov_r && !symmetric) {
        shed(xl, false, xr);
      } else {
        double lo = std::max(xl, al), hi = std::min(xr, ar);
        int a = first[l + 1] + static_cast<int>(std::floor((lo + hi) / 2 - al));
        mag(sFa, sFb);
        mag(sMa - lo * sFa, sMb - lo * sFb);
        mag(hi * sFa - sMa, hi * sFb - sMb);
        upFa[a] += sFa;
        upFb[a] += sFb;
        upMa[a] += sMa;
        upMb[a] += sMb;
      }
    }
  }
  if (lower > upper) return kInf;
  return lower;
}

std::vector<std::vector<IRow>> neighborhood(const std::vector<IRow>& p,
                                            bool symmetric) {
  std::vector<std::vector<IRow>> cand;
  const int L = static_cast<int>(p.size());
  auto push = [&](std::vector<IRow> q) {
    if (rows_valid(q, symmetric)) cand.push_back(std::move(q));
  };

  // Widen/narrow each row above the bottom block.
  for (int l = 1; l < L; ++l) {
    if (symmetric) {
      for (int d : {1, -1}) {
        std::vector<IRow> q = p;
        q[l].l2 -= 2 * d;
        q[l].w += 2 * d;
        push(std::move(q));
      }
    } else {
      for (int d : {1, -1}) {
        std::vector<IRow> q = p;  // right end
        q[l].w += d;
        push(std::move(q));
        q = p;  // left end
        q[l].l2 -= 2 * d;
        q[l].w += d;
        push(std::move(q));
      }
    }
  }

  // Shift two adjacent rows together: reaches states whose intermediate
  // single-row step is worse.
  for (int l = 1; l + 1 < L; ++l) {
    if (symmetric) {
      for (int d : {1, -1}) {
        std::vector<IRow> q = p;
        for (int m : {l, l + 1}) {
          q[m].l2 -= 2 * d;
          q[m].w += 2 * d;
        }
        push(std::move(q));
      }
    } else {
      for (int d : {1, -1}) {
        std::vector<IRow> q = p;  // right end
        for (int m : {l, l + 1}) q[m].w += d;
        push(std::move(q));
        q = p;  // left end
        for (int m : {l, l + 1}) {
          q[m].l2 -= 2 * d;
          q[m].w += d;
        }
        push(std::move(q));
      }
    }
  }

  // Reverse one step of a boundary walk, carrying every row above with
  // it: reshapes monotone stretches that no single-row change can touch.
  for (int l = 1; l < L; ++l) {
    if (symmetric) {
      int d = p[l].r2() > p[l - 1].r2() ? -1 : 1;
      std::vector<IRow> q = p;
      for (int m = l; m < L; ++m) {
        q[m].l2 -= 2 * d;
        q[m].w += 2 * d;
      }
      push(std::move(q));
    } else {
      // Right boundary only.
      int d = p[l].r2() > p[l - 1].r2() ? -1 : 1;
      std::vector<IRow> q = p;
      for (int m = l; m < L; ++m) q[m].w += d;
      push(std::move(q));
      // Left boundary only.
      d = p[l].l2 < p[l - 1].l2 ? 1 : -1;
      q = p;
      for (int m = l; m < L; ++m) {
        q[m].l2 += 2 * d;
        q[m].w -= d;
      }
      push(std::move(q));
    }
  }

  // Add a layer at the top.
  const IRow& t = p.back();
  if (symmetric) {
    for (int d : {1, -1}) {
      std::vector<IRow> q = p;
      q.push_back({t.l2 - d, t.w + d});
      push(std::move(q));
    }
  } else {
    for (int dl : {-1, 1}) {
      for (int dr : {-1, 1}) {
        std::vector<IRow> q = p;
        q.push_back({t.l2 + dl, t.w + (dr - dl) / 2});
        push(std::move(q));
      }
    }
  }

  // Remove the top layer.
  if (L >= 2) {
    std::vector<IRow> q = p;
    q.pop_back();
    push(std::move(q));
  }

  // Add/remove a layer at the bottom (asymmetric only: a symmetric
  // profile always bottoms out in the single centered block).
  if (!symmetric) {
    for (int d : {-1, 1}) {
      std::vector<IRow> q = p;
      q.insert(q.begin(), {p[0].l2 + d, 1});
      push(std::move(q));
    }
    if (L >= 2 && p[1].w == 1) {
      std::vector<IRow> q = p;
      q.erase(q.begin());
      push(std::move(q));
    }
  }
  return cand;
}

// Core first-improvement descent from one seed; returns the converged
// rows and their screened weight.
std::pair<std::vector<IRow>, double> descend(std::vector<IRow> rows,
                                             bool symmetric, long long target2) {
  auto encode = [](const std::vector<IRow>& q) {
    std::vector<long long> key;
    for (const IRow& r : q) {
      key.push_back(r.l2);
      key.push_back(r.w);
    }
    return key;
  };

  double best = min_weight_rows(rows, symmetric);
  // Equal-weight moves are taken too (to unvisited profiles only): the
  // landscape has wide plateaus, e.g. capping a stack with layers the
  // point weights simply bypass.
  std::set<std::vector<long long>> visited;
  visited.insert(encode(rows));
  int plateau_budget = 4000;
  bool improved = true;
  long moves = 0;
  const bool trace = std::getenv("BRICKWALL_TRACE") != nullptr;
  // First-improvement with a circular cursor: after a move, scanning
  // resumes near the accepted candidate's position instead of the front,
  // so an unproductive prefix is not re-evaluated on every sweep.
  size_t cursor = 0;
  while (improved) {
    improved = false;
    if (trace && ++moves % 100 == 0)
      std::fprintf(stderr, "move %ld best %.6f levels %zu budget %d\n", moves,
                   best, rows.size(), plateau_budget);
    std::vector<std::vector<IRow>> cand = neighborhood(rows, symmetric);
    for (size_t step = 0; step < cand.size(); ++step) {
      size_t idx = (cursor + step) % cand.size();
      std::vector<IRow>& q = cand[idx];
      if (rows_overhang2(q) < target2) continue;
      double wq = min_weight_rows(q, symmetric);
      bool strict = wq < best - 1e-7;
      bool sideways = !strict && wq < best + 1e-7 && plateau_budget > 0 &&
                      !visited.count(encode(q));
      if (!strict && !sideways) continue;
      if (sideways) --plateau_budget;
      rows = std::move(q);
      best = wq;
      visited.insert(encode(rows));
      cursor = idx;
      improved = true;
      break;
    }
  }
  return {std::move(rows), best};
}

// A symmetric flare: half-width follows the +/- half-block pattern,
// clamped below at a single block.
std::vector<IRow> flare_rows(const std::string& pat, long long target2) {
  std::vector<IRow> rows{{-1, 1}};
  long long e2 = 1;
  size_t k = 0;
  while (e2 < target2 && rows.size() < 4096) {
    e2 += pat[k % pat.size()] == 'u' ? 1 : -1;
    ++k;
    if (e2 < 1) e2 = 1;
    rows.push_back({-e2, static_cast<int>(e2)});
  }
  return rows;
}

// An asymmetric "leaning column": a symmetric flared base up to
// half-width base2/2, then a constant-width column marching right along
// the +/- pattern until the target overhang is reached.
std::vector<IRow> lamp_rows(long long base2, const std::string& pat,
                            long long target2) {
  std::vector<IRow> rows = flare_rows("uudud", std::min(base2, target2));
  long long l2 = rows.back().l2;
  const int w = rows.back().w;
  size_t k = 0;
  while (l2 + 2 * w < target2 && rows.size() < 4096) {
    l2 += pat[k % pat.size()] == 'u' ? 1 : -1;
    ++k;
    rows.push_back({l2, w});
  }
  return rows;
}

}  // namespace

double min_weight_for_profile_fast(const BrickWallProfile& p) {
  return min_weight_rows(to_rows(p), p.symmetric);
}

BrickWallResult local_search_brickwall(double target_overhang, bool symmetric,
                                       std::optional<BrickWallProfile> seed) {
  const long long target2 =
      static_cast<long long>(std::ceil(2 * (target_overhang - 1e-9)));

  std::vector<std::vector<IRow>> seeds;
  if (seed) {
    BrickWallProfile cur = *seed;
    cur.symmetric = symmetric;
    validate_profile(cur);
    if (to_double(profile_overhang(cur)) < target_overhang - 1e-9)
      throw std::invalid_argument("seed profile does not reach the target");
    seeds.push_back(to_rows(cur));
  } else {
    if (target_overhang < 0.5)
      throw std::invalid_argument("overhang targets below 1/2 are unreachable");
    // Deterministic seed portfolio: gentle flares at several slopes, and
    // for the asymmetric search leaning columns over flared bases.
    for (const char* pat : {"uud", "uudud", "uududud", "ududu"})
      seeds.push_back(flare_rows(pat, target2));
    if (!symmetric)
      for (long long base2 : {6, 10, 12})
        for (const char* pat : {"udududu", "ududududu"})
          seeds.push_back(lamp_rows(base2, pat, target2));
  }

  bool have = false;
  std::vector<IRow> best_rows;
  double best = std::numeric_limits<double>::infinity();
  for (auto& s : seeds) {
    if (!rows_valid(s, symmetric) || rows_overhang2(s) < target2) continue;
    auto [rows, w] = descend(std::move(s), symmetric, target2);
    // Certify with the exact propagation before comparing.
    double we = min_weight_for_profile(from_rows(rows, symmetric));
    if (!have || we < best) {
      best_rows = std::move(rows);
      best = we;
      have = true;
    }
  }
  if (!have) throw std::invalid_argument("no valid seed reaches the target");

  BrickWallProfile out = from_rows(best_rows, symmetric);
  validate_profile(out);
  return {out, best};
}

std::vector<std::pair<double, double>> scaled_outline(const BrickWallProfile& p) {
  double oh = to_double(profile_overhang(p));
  std::vector<std::pair<double, double>> poly;
  const int L = static_cast<int>(p.levels.size());
  for (int l = 0; l < L; ++l) {
    double r = to_double(p.levels[l].right());
    poly.emplace_back(r / oh, l / oh);
    poly.emplace_back(r / oh, (l + 1) / oh);
  }
  for (int l = L - 1; l >= 0; --l) {
    double left = to_double(p.levels[l].left);
    poly.emplace_back(left / oh, (l + 1) / oh);
    poly.emplace_back(left / oh, l / oh);
  }
  return poly;
}

}  // namespace overhang
