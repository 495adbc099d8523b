#include "overhang/shield.hpp"

#include <cmath>
#include <functional>

#include "overhang/lp.hpp"
#include <sstream>
#include <stdexcept>

namespace overhang {

namespace {

const Rational kHalf(1, 2);

// Nearest 12-fractional-digit decimal, the precision the document format
// round-trips exactly.
Rational snap(double value) {
  static const BigInt scale = []() {
    BigInt s(1);
    for (int i = 0; i < 12; ++i) s *= 10;
    return s;
  }();
  return Rational(BigInt(std::llround(value * 1e12)), scale);
}

}  // namespace

SpineExact rationalize_spine(const SpinalDesign& design) {
  SpineExact sp;
  sp.k = design.k;
  sp.t.resize(sp.k + 1);
  sp.t[0] = 0;
  sp.w.resize(sp.k);
  sp.d.resize(sp.k);
  for (int i = 1; i <= sp.k; ++i) {
    sp.t[i] = snap(design.loads[i]);
    if (sp.t[i] < sp.t[i - 1] + 1) sp.t[i] = sp.t[i - 1] + 1;  // keep w >= 0
    sp.w[i - 1] = sp.t[i] - sp.t[i - 1] - 1;
    sp.d[i - 1] = (sp.w[i - 1] + kHalf) / sp.t[i];
  }
  // Left edge of spine block i: its right edge is the suffix sum of d.
  sp.x.resize(sp.k);
  Rational right(0);
  for (int i = sp.k - 1; i >= 0; --i) {
    right += sp.d[i];
    sp.x[i] = right - 1;
  }
  return sp;
}

ShieldResult place_shields(const SpineExact& sp) {
  int k = sp.k;
  ShieldResult res;
  res.layers.resize(std::max(k, 1));
  // 1-based accessors matching the derivation: spine blocks 1..k top-down.
  auto X = [&](int i) { return sp.x[i - 1]; };
  auto W = [&](int i) { return sp.w[i - 1]; };

  for (int i = k - 1; i >= 1; --i) {
    Rational u_below(0), z_below(0);
    if (i < k - 1) {
      ShieldLayer& below = res.layers[i + 1];
      if (below.z <= X(i + 1) - 1) {
        // The shield above cannot reach that far left: peel the largest
        // integral external force off the chain at the left edge that
        // keeps z within the shield, and recompute.
        Rational vnew(rational_floor((1 - below.z + below.y) * below.u));
        bool rescued = false;
        if (vnew > 0 && vnew < below.u) {
          Rational unew = below.u - vnew;
          below.z = (below.z * below.u - below.y * vnew) / unew;
          below.u = unew;
          below.v += vnew;
          rescued = below.z > X(i + 1) - 1;
        }
        if (!rescued) {
          res.fail_index = i + 1;
          res.diagnostics = "stalled at shield " + std::to_string(i + 1) +
                            ": required force point stays out of reach";
          return res;
        }
      }
      u_below = below.u;
      z_below = below.z;
    }

    ShieldLayer& cur = res.layers[i];
    cur.index = i;
    cur.v = 0;
    cur.y = X(i) - 1;
    if (i < k - 1 && z_below < cur.y) cur.y = z_below;

    cur.u = u_below + W(i + 1) - 1;
    Rational moment = z_below * u_below + X(i + 1) * W(i + 1);
    if (cur.u > 0) {
      // Keep the force from above on this shield's top face (z >= y).
      Rational ycap = (moment - kHalf) / (cur.u + 1);
      if (ycap < cur.y) cur.y = ycap;
      if (cur.y <= X(i + 1) - 1) {
        res.fail_index = i;
        res.diagnostics = "shield " + std::to_string(i) +
                          " cannot reach its own support point";
        return res;
      }
    }
    Rational rhs = moment - (cur.y + kHalf);
    if (cur.u < 0) {
      res.fail_index = i;
      res.diagnostics = "shield " + std::to_string(i) +
                        " would need a negative force from above";
      return res;
    }
    if (cur.u == 0) {
      if (rhs != 0) {
        res.fail_index = i;
        res.diagnostics = "shield " + std::to_string(i) +
                          " has an unbalanced moment and no force to fix it";
        return res;
      }
      cur.z = cur.y;
    } else {
      cur.z = rhs / cur.u;
      if (cur.z > cur.y + 1) {
        res.fail_index = i;
        res.diagnostics = "shield " + std::to_string(i) +
                          " needs a force beyond its right edge";
        return res;
      }
    }
  }
  res.complete = true;
  return res;
}

std::vector<Tower> realize_towers(const SpineExact& sp,
                                  const std::vector<ShieldLayer>& layers) {
  std::vector<Tower> towers;
  for (const ShieldLayer& l : layers) {
    if (l.index < 1 || l.v == 0) continue;
    if (denominator(l.v) != 1)
      throw std::logic_error("external shield force is not integral");
    Tower t;
    t.center = l.y;
    t.count = static_cast<long long>(numerator(l.v));
    t.base_level = sp.k - l.index + 1;
    towers.push_back(t);
  }
  return towers;
}

namespace {

void add_pile(Stack& s, const Rational& center, long long count, int base_level) {
  for (long long j = 0; j < count; ++j)
    s.blocks.emplace_back(Rational(center - kHalf), base_level + static_cast<int>(j));
}

ConversionResult fail(std::string why) {
  ConversionResult out;
  out.diagnostics = std::move(why);
  return out;
}

struct TopVars {
  std::vector<Rational> y, z, c;        // index 0..T; z[0] unused
  std::vector<Tower> tower_blocks;      // aligned runs realizing kept towers
};

// A surviving external force, to be realized as a near-vertical tower of
// whole blocks inside the feasibility LP.
struct KeptForce {
  int layer = 0;
  long long count = 0;
  int base_level = 0;
  Rational force_x;  // where the resultant must act (left edge of B'_layer)
};

// Feasibility LP for a fixed redesign depth T and pile split m[0..T]:
// variables are the left edges y_i, the chain force positions z_i, the
// pile centers c_i and the tower block-run centers, all offset against
// lower bounds so the nonnegative-variable simplex applies directly.
// Zero objective. Tower runs are cut at every level shared with a
// redesigned shield so single blocks can dodge them; center-of-mass and
// suffix-balance rows keep each tower a valid stack that presses on its
// shield exactly at the required point.
bool solve_top_lp(const SpineExact& sp, int T, const std::vector<Rational>& u,
                  const std::vector<long long>& m, const Rational& u_next,
                  const Rational& z_next, const std::vector<KeptForce>& forces,
                  const ShieldResult& shields, TopVars& out) {
  const int k = sp.k;
  const Rational eps(1, 1000000);
  auto X = [&](int i) { return sp.x[i - 1]; };
  auto W = [&](int i) { return sp.w[i - 1]; };

  LpProblem<Rational> p;
  std::vector<int> a(T + 1), b(T + 1, -1), e(T + 1, -1);
  std::vector<Rational> base(T + 1);
  base[0] = X(1) - 1 + eps;
  for (int i = 1; i <= T; ++i) base[i] = X(i + 1) - 1 + eps;
  for (int i = 0; i <= T; ++i) a[i] = p.add_var();
  for (int i = 1; i <= T; ++i)
    if (u[i] > 0) b[i] = p.add_var();
  for (int i = 0; i <= T; ++i)
    if (m[i] > 0) e[i] = p.add_var();

  bool ok = true;
  auto upper = [&](int var, const Rational& ub) {
    if (ub < 0) { ok = false; return; }
    p.inequalities.push_back({{{var, Rational(-1)}}, Rational(-ub)});
  };
  auto lower = [&](int var, const Rational& lb) {
    if (lb > 0) p.inequalities.push_back({{{var, Rational(1)}}, lb});
  };

  // Placement windows: y_0 on the top spine block, y_i between the left
  // edges of spine blocks i+1 and i.
  upper(a[0], 1 - eps);
  for (int i = 1; i <= T; ++i) upper(a[i], X(i) - 1 - base[i]);
  for (int i = 1; i <= T; ++i)
    if (b[i] >= 0) upper(b[i], Rational(1));
  for (int i = 0; i <= T; ++i)
    if (e[i] >= 0) upper(e[i], Rational(1));

  // The lowest redesigned piece must cover the kept chain's entry point.
  if (u_next > 0) {
    upper(a[T], z_next - base[T]);
    lower(a[T], z_next - 1 - base[T]);
  }

  // Chain contacts inside the region: y_{i-1} <= z_i <= y_{i-1} + 1.
  for (int i = 1; i <= T; ++i) {
    if (b[i] < 0) continue;
    p.inequalities.push_back(
        {{{a[i], Rational(1)}, {b[i], Rational(1)}, {a[i - 1], Rational(-1)}},
         Rational(base[i - 1] - base[i])});
    p.inequalities.push_back(
        {{{a[i - 1], Rational(1)}, {a[i], Rational(-1)}, {b[i], Rational(-1)}},
         Rational(base[i] - base[i - 1] - 1)});
  }

  // Piles must clear every shield whose level they pass through.
  for (int i = 1; i <= T; ++i) {
    if (e[i] < 0) continue;
    for (int j = i - 1; j >= 0; --j) {
      if (k - j > k - i + m[i]) continue;  // pile tops out below shield j
      p.inequalities.push_back(
          {{{a[j], Rational(1)}, {a[i], Rational(-1)}, {e[i], Rational(-1)}},
           Rational(kHalf + base[i] - base[j])});
    }
  }
  for (int i = 1; i <= T; ++i) {
    if (e[i] < 0) continue;
    for (int j = 0; j < i; ++j) {
      if (e[j] < 0) continue;
      p.inequalities.push_back({{{a[j], Rational(1)},
                                 {e[j], Rational(1)},
                                 {a[i], Rational(-1)},
                                 {e[i], Rational(-1)}},
                                Rational(1 + base[i] - base[j])});
    }
  }

  // Moment balance of each redesigned shield and of the cap block.
  for (int i = 1; i <= T && ok; ++i) {
    typename LpProblem<Rational>::Row row;
    Rational coeff_a = u[i] + m[i] + 1;
    row.coeffs.push_back({a[i], coeff_a});
    if (b[i] >= 0) row.coeffs.push_back({b[i], u[i]});
    if (e[i] >= 0) row.coeffs.push_back({e[i], Rational(m[i])});
    Rational rhs = X(i + 1) * W(i + 1) - base[i] * coeff_a - kHalf;
    if (i == T) {
      rhs += u_next * z_next;
    } else {
      if (u[i + 1] > 0) {
        row.coeffs.push_back({a[i + 1], Rational(-u[i + 1])});
        if (b[i + 1] >= 0) row.coeffs.push_back({b[i + 1], Rational(-u[i + 1])});
      }
      rhs += base[i + 1] * u[i + 1];
    }
    row.rhs = rhs;
    p.equalities.push_back(std::move(row));
  }
  {
    typename LpProblem<Rational>::Row row;
    Rational coeff_a = Rational(m[0]) + 1;
    row.coeffs.push_back({a[0], coeff_a});
    if (e[0] >= 0) row.coeffs.push_back({e[0], Rational(m[0])});
    Rational rhs = X(1) * W(1) - base[0] * coeff_a - kHalf;
    if (T == 0) {
      rhs += u_next * z_next;
    } else {
      if (u[1] > 0) {
        row.coeffs.push_back({a[1], Rational(-u[1])});
        if (b[1] >= 0) row.coeffs.push_back({b[1], Rational(-u[1])});
      }
      rhs += base[1] * u[1];
    }
    row.rhs = rhs;
    p.equalities.push_back(std::move(row));
  }

  // Tower realizations.
  struct Run {
    int var = -1;
    long long count = 0;
    int level = 0;  // of its lowest block
  };
  std::vector<std::vector<Run>> tower_runs(forces.size());
  for (size_t t = 0; t < forces.size() && ok; ++t) {
    const KeptForce& f = forces[t];
    const Rational B = f.force_x - 3;  // generous offset origin
    // Partition the tower's levels: each level shared with a shield gets
    // its own block; uninterrupted stretches stay one aligned run.
    std::vector<Run>& runs = tower_runs[t];
    int top_level = f.base_level + static_cast<int>(f.count) - 1;
    auto shield_at = [&](int level) {  // shield index at this level, or -1
      int j = k - level;
      return (j >= 0 && j <= k - 1) ? j : -1;
    };
    for (int L = f.base_level; L <= top_level;) {
      int j = shield_at(L);
      bool cut = L == f.base_level || j >= 0;
      if (!cut) {  // no shields this high: the rest is one run
        runs.push_back({p.add_var(), top_level - L + 1, L});
        break;
      }
      runs.push_back({p.add_var(), 1, L});
      ++L;
    }
    // Clearance against the shield sharing each single-block level, and
    // against any pile whose levels intersect a run's.
    for (const Run& r : runs) {
      int r_top = r.level + static_cast<int>(r.count) - 1;
      for (int L = r.level; L <= std::min(r_top, k); ++L) {
        int j = shield_at(L);
        if (j < 0 || j == f.layer) continue;
        if (j <= T) {  // redesigned: variable left edge
          p.inequalities.push_back(
              {{{a[j], Rational(1)}, {r.var, Rational(-1)}},
               Rational(kHalf + B - base[j])});
        } else if (shields.layers[j].index == j) {
          upper(r.var, shields.layers[j].y - kHalf - B);
        }
      }
      for (int i = 0; i <= T; ++i) {
        if (e[i] < 0) continue;
        int p_lo = k - i + 1, p_hi = k - i + static_cast<int>(m[i]);
        if (r_top < p_lo || r.level > p_hi) continue;
        p.inequalities.push_back({{{a[i], Rational(1)},
                                   {e[i], Rational(1)},
                                   {r.var, Rational(-1)}},
                                  Rational(1 + B - base[i])});
      }
    }
    // The resultant acts at the force point, which must also lie on the
    // bottom run's footprint.
    {
      typename LpProblem<Rational>::Row row;
      Rational rhs(0);
      for (const Run& r : runs) {
        row.coeffs.push_back({r.var, Rational(r.count)});
        rhs += Rational(r.count) * (f.force_x - B);
      }
      row.rhs = rhs;
      p.equalities.push_back(std::move(row));
      upper(runs[0].var, f.force_x + kHalf - B);
      lower(runs[0].var, f.force_x - kHalf - B);
    }
    // Every suffix of runs must balance on the run below it: its center
    // of mass stays within half a block of both adjacent run centers.
    for (size_t r = 1; r < runs.size(); ++r) {
      Rational N(0);
      std::vector<std::pair<int, Rational>> suffix;
      for (size_t q = r; q < runs.size(); ++q) {
        suffix.push_back({runs[q].var, Rational(runs[q].count)});
        N += runs[q].count;
      }
      for (int against : {static_cast<int>(r) - 1, static_cast<int>(r)}) {
        auto co = suffix;
        bool merged = false;
        for (auto& [v, cf] : co)
          if (v == runs[against].var) { cf -= N; merged = true; }
        if (!merged) co.push_back({runs[against].var, Rational(-N)});
        p.inequalities.push_back({co, Rational(-N / 2)});
        for (auto& [v, cf] : co) cf = -cf;
        p.inequalities.push_back({co, Rational(-N / 2)});
      }
    }
  }

  if (!ok) return false;
  auto res = lp_solve(p);
  if (res.status != LpStatus::Feasible && res.status != LpStatus::Optimal)
    return false;

  out.y.assign(T + 1, Rational(0));
  out.z.assign(T + 1, Rational(0));
  out.c.assign(T + 1, Rational(0));
  for (int i = 0; i <= T; ++i) {
    out.y[i] = base[i] + res.solution[a[i]];
    out.z[i] = out.y[i] + (b[i] >= 0 && i >= 1 ? res.solution[b[i]] : Rational(0));
    out.c[i] = out.y[i] + (e[i] >= 0 ? res.solution[e[i]] : Rational(0));
  }
  for (size_t t = 0; t < forces.size(); ++t) {
    const Rational B = forces[t].force_x - 3;
    for (const Run& r : tower_runs[t])
      out.tower_blocks.push_back(
          {Rational(B + res.solution[r.var]), r.count, r.level});
  }
  return true;
}

}  // namespace

TopAssembly finish_top(const SpineExact& sp, const ShieldResult& shields) {
  TopAssembly best;
  int k = sp.k;
  int t_min = shields.complete ? 0 : shields.fail_index;
  int t_max = std::min(k - 1, t_min + 4);
  int best_towers = -1;

  for (int T = t_min; T <= t_max; ++T) {
    Rational u_next(0), z_next(0);
    if (T + 1 <= k - 1) {
      u_next = shields.layers[T + 1].u;
      z_next = shields.layers[T + 1].z;
    }
    std::vector<KeptForce> forces;
    bool forces_ok = true;
    for (const auto& l : shields.layers) {
      if (l.index <= T || l.v == 0) continue;
      if (denominator(l.v) != 1) { forces_ok = false; break; }
      forces.push_back({l.index, static_cast<long long>(numerator(l.v)),
                        k - l.index + 1, l.y});
    }
    if (!forces_ok) continue;
    int kept = static_cast<int>(forces.size());
    if (best_towers >= 0 && kept >= best_towers) continue;

    Rational M = u_next - (T + 1);
    for (int j = 1; j <= T + 1; ++j) M += sp.w[j - 1];
    if (M < 0 || denominator(M) != 1) continue;
    long long budget = static_cast<long long>(numerator(M));

    // Try pile splits m[1..T] (the cap absorbs the rest), lightest
    // shield loads first, until the LP admits one.
    std::vector<long long> m(T + 1, 0);
    int tries = 0;
    auto attempt = [&]() -> bool {
      if (++tries > 600) return false;
      std::vector<Rational> u(T + 2, Rational(0));
      u[T + 1] = u_next;
      for (int j = T; j >= 1; --j) {
        u[j] = u[j + 1] + sp.w[j] - 1 - m[j];
        if (u[j] < 0) return false;
      }
      TopVars vars;
      if (!solve_top_lp(sp, T, u, m, u_next, z_next, forces, shields, vars))
        return false;
      best = TopAssembly{};
      best.depth = T;
      best.feasible = true;
      for (int j = 1; j <= T; ++j) {
        ShieldLayer l;
        l.index = j;
        l.y = vars.y[j];
        l.z = vars.z[j];
        l.u = u[j];
        l.v = 0;
        best.relaid.push_back(l);
        if (m[j] > 0) best.piles.push_back({vars.c[j], m[j], k - j + 1});
      }
      best.y0 = vars.y[0];
      if (m[0] > 0) best.piles.push_back({vars.c[0], m[0], k + 1});
      best.tower_blocks = vars.tower_blocks;
      best_towers = kept;
      best.note = "depth " + std::to_string(T) + ", " +
                  std::to_string(best.piles.size()) + " pile(s)";
      return true;
    };
    std::function<bool(int, long long)> enumerate = [&](int i,
                                                        long long used) {
      if (i > T) {
        m[0] = budget - used;
        return attempt();
      }
      for (long long v = 0; used + v <= budget; ++v) {
        m[i] = v;
        if (enumerate(i + 1, used + v)) return true;
        if (tries > 600) return false;
      }
      return false;
    };
    enumerate(1, 0);
    if (best_towers == 0) break;
  }
  if (!best.feasible)
    best.note = "no feasible top assembly up to depth " + std::to_string(t_max);
  return best;
}

ConversionResult convert(const SpinalDesign& design) {
  SpineExact sp = rationalize_spine(design);
  int k = sp.k;
  if (denominator(sp.t[k]) != 1)
    return fail("total weight is not integral; conversion needs whole blocks");

  bool loaded = false;
  for (const Rational& wi : sp.w) loaded |= wi != 0;

  ConversionResult out;
  if (!loaded) {  // a harmonic spine is already a standard stack
    for (int i = k - 1; i >= 0; --i)
      out.stack.blocks.emplace_back(Rational(sp.x[i]), k - 1 - i);
    out.stack.name = "converted-w" + decimal_string(sp.t[k]).value_or("");
    out.success = true;
    return out;
  }

  ShieldResult shields = place_shields(sp);
  TopAssembly top = finish_top(sp, shields);
  out.residual_top = top;
  if (!top.feasible) {
    out.diagnostics = shields.complete
                          ? top.note
                          : shields.diagnostics + "; " + top.note;
    return out;
  }

  int depth = top.depth;
  out.placed_shields = k - 1 - depth;

  // Assemble: spine bottom-up, kept shields and towers, then the
  // LP-designed top region (redesigned shields, cap block, piles).
  Stack s;
  for (int i = k - 1; i >= 0; --i)
    s.blocks.emplace_back(Rational(sp.x[i]), k - 1 - i);
  std::vector<ShieldLayer> kept;
  for (const auto& l : shields.layers)
    if (l.index > depth) kept.push_back(l);
  for (const auto& l : kept) s.blocks.emplace_back(Rational(l.y), k - l.index);
  out.towers = realize_towers(sp, kept);
  for (const Tower& run : top.tower_blocks)
    add_pile(s, run.center, run.count, run.base_level);
  for (const auto& l : top.relaid)
    s.blocks.emplace_back(Rational(l.y), k - l.index);
  s.blocks.emplace_back(top.y0, k);
  for (const Tower& t : top.piles) add_pile(s, t.center, t.count, t.base_level);
  s.name = "converted-w" + decimal_string(sp.t[k]).value_or("");

  if (s.size() != static_cast<long long>(numerator(sp.t[k])))
    return fail("block count mismatch after conversion");
  try {
    validate_geometry(s);
  } catch (const InvalidGeometry& e) {
    return fail(std::string("conversion geometry collision: ") + e.what());
  }
  out.stack = std::move(s);
  out.success = true;
  return out;
}

std::string conversion_report(const ConversionResult& result) {
  std::ostringstream os;
  os << (result.success ? "converted" : "failed") << ": "
     << (result.success ? result.stack.name : result.diagnostics) << "\n";
  os << "shields placed: " << result.placed_shields << "\n";
  for (const Tower& t : result.towers)
    os << "tower of " << t.count << " at x = " << to_double(t.center)
       << " (level " << t.base_level << ")\n";
  if (result.residual_top.feasible)
    os << "top assembly: " << result.residual_top.note << "\n";
  for (const Tower& t : result.residual_top.piles)
    os << "top pile of " << t.count << " at x = " << to_double(t.center)
       << " (level " << t.base_level << ")\n";
  return os.str();
}

}  // namespace overhang
