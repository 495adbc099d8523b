#include "overhang/balance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

namespace overhang {

namespace {

// Two rows per block: row 2i sums forces, row 2i+1 sums moments. Upward
// forces on a block enter positively, forces it exerts downward enter
// negatively; gravity and point weights sit on the right-hand side.
template <class T, class GetA, class GetB, class GetPos, class GetMag>
LpProblem<T> assemble(const Stack& stack, const std::vector<Contact>& cs,
                      GetA get_a, GetB get_b, GetPos get_pos, GetMag get_mag) {
  LpProblem<T> lp;
  lp.num_vars = static_cast<int>(cs.size()) * 2;
  int n = stack.size();
  lp.equalities.resize(2 * n);
  for (int i = 0; i < n; ++i) {
    lp.equalities[2 * i].rhs = T(1);
    lp.equalities[2 * i + 1].rhs = get_pos(stack.blocks[i]) + T(1) / T(2);
  }
  for (const auto& pw : stack.weights) {
    lp.equalities[2 * pw.block].rhs += get_mag(pw);
    lp.equalities[2 * pw.block + 1].rhs += get_mag(pw) * get_pos(pw);
  }
  for (size_t k = 0; k < cs.size(); ++k) {
    const Contact& c = cs[k];
    int v0 = static_cast<int>(2 * k), v1 = v0 + 1;
    T a = get_a(c), b = get_b(c);
    lp.equalities[2 * c.upper].coeffs.push_back({v0, T(1)});
    lp.equalities[2 * c.upper].coeffs.push_back({v1, T(1)});
    lp.equalities[2 * c.upper + 1].coeffs.push_back({v0, a});
    lp.equalities[2 * c.upper + 1].coeffs.push_back({v1, b});
    if (c.lower != kTable) {
      lp.equalities[2 * c.lower].coeffs.push_back({v0, T(-1)});
      lp.equalities[2 * c.lower].coeffs.push_back({v1, T(-1)});
      lp.equalities[2 * c.lower + 1].coeffs.push_back({v0, -a});
      lp.equalities[2 * c.lower + 1].coeffs.push_back({v1, -b});
    }
  }
  return lp;
}

}  // namespace

BalanceLp build_balance_lp(const Stack& stack) {
  BalanceLp out;
  out.contact_list = contacts(stack);
  out.lp = assemble<double>(
      stack, out.contact_list, [](const Contact& c) { return c.a; },
      [](const Contact& c) { return c.b; },
      [](const auto& o) {
        if constexpr (requires { o.x; })
          return o.x;
        else
          return o.position;
      },
      [](const PointWeight& w) { return w.magnitude; });
  return out;
}

BalanceLpExact build_balance_lp_exact(const Stack& stack) {
  if (!stack.has_exact())
    throw UnsupportedMode(
        "exact mode requires rational coordinates throughout; use float mode");
  BalanceLpExact out;
  out.contact_list = contacts(stack);
  out.lp = assemble<Rational>(
      stack, out.contact_list, [](const Contact& c) { return *c.a_exact; },
      [](const Contact& c) { return *c.b_exact; },
      [](const auto& o) {
        if constexpr (requires { o.x_exact; })
          return *o.x_exact;
        else
          return *o.position_exact;
      },
      [](const PointWeight& w) { return *w.magnitude_exact; });
  return out;
}

namespace {

std::vector<ForceVar> witness_from(const std::vector<Contact>& cs,
                                   const std::vector<double>& x) {
  std::vector<ForceVar> w;
  w.reserve(cs.size() * 2);
  for (size_t k = 0; k < cs.size(); ++k) {
    for (int e = 0; e < 2; ++e) {
      ForceVar f;
      f.contact = cs[k];
      f.end = e;
      f.magnitude = x[2 * k + e];
      w.push_back(f);
    }
  }
  return w;
}

// Exact residual check of an exact candidate solution.
bool exact_solution_ok(const LpProblem<Rational>& lp, const std::vector<Rational>& x) {
  for (const Rational& v : x)
    if (v < 0) return false;
  for (const auto& row : lp.equalities) {
    Rational s = -row.rhs;
    for (const auto& [j, c] : row.coeffs) s += c * x[j];
    if (s != 0) return false;
  }
  return true;
}

bool exact_farkas_ok(const LpProblem<Rational>& lp, const std::vector<Rational>& y) {
  std::vector<Rational> col_sum(lp.num_vars, Rational(0));
  Rational yb(0);
  for (size_t r = 0; r < lp.equalities.size(); ++r) {
    for (const auto& [j, c] : lp.equalities[r].coeffs) col_sum[j] += y[r] * c;
    yb += y[r] * lp.equalities[r].rhs;
  }
  for (const Rational& s : col_sum)
    if (s > 0) return false;
  return yb > 0;
}

}  // namespace

double witness_residual(const Stack& stack, const std::vector<ForceVar>& witness) {
  int n = stack.size();
  std::vector<double> force(n, 0.0), moment(n, 0.0);
  for (const auto& f : witness) {
    double p = f.end == 0 ? f.contact.a : f.contact.b;
    force[f.contact.upper] += f.magnitude;
    moment[f.contact.upper] += p * f.magnitude;
    if (f.contact.lower != kTable) {
      force[f.contact.lower] -= f.magnitude;
      moment[f.contact.lower] -= p * f.magnitude;
    }
  }
  std::vector<double> frhs(n, 1.0), mrhs(n);
  for (int i = 0; i < n; ++i) mrhs[i] = stack.blocks[i].x + 0.5;
  for (const auto& pw : stack.weights) {
    frhs[pw.block] += pw.magnitude;
    mrhs[pw.block] += pw.magnitude * pw.position;
  }
  double r = 0.0;
  for (int i = 0; i < n; ++i) {
    r = std::max(r, std::abs(force[i] - frhs[i]));
    r = std::max(r, std::abs(moment[i] - mrhs[i]));
  }
  return r;
}

BalanceResult is_balanced(const Stack& stack, BalanceMode mode, double tol) {
  BalanceResult res;
  BalanceLp built = build_balance_lp(stack);
  auto fres = lp_solve(built.lp, 1e-11);

  if (mode == BalanceMode::Float) {
    if (fres.status == LpStatus::Infeasible && fres.infeasibility > tol) {
      res.balanced = false;
      res.certificate = fres.farkas;
      return res;
    }
    res.balanced = true;
    if (fres.status == LpStatus::Infeasible) {
      // Within tolerance of feasible: accept, no witness available.
      res.max_residual = fres.infeasibility;
      return res;
    }
    res.witness = witness_from(built.contact_list, fres.solution);
    res.max_residual = witness_residual(stack, res.witness);
    return res;
  }

  BalanceLpExact exact = build_balance_lp_exact(stack);
  if (fres.status != LpStatus::Infeasible) {
    auto xr = solve_on_columns(exact.lp, fres.basis);
    if (xr && exact_solution_ok(exact.lp, *xr)) {
      res.balanced = true;
      res.certified = true;
      res.witness = witness_from(built.contact_list, fres.solution);
      for (size_t k = 0; k < res.witness.size(); ++k) {
        res.witness[k].magnitude_exact = (*xr)[k];
        res.witness[k].magnitude = to_double((*xr)[k]);
      }
      res.max_residual = 0.0;
      return res;
    }
  }
  // Fall back to a full exact simplex (Bland's rule).
  auto eres = lp_solve(exact.lp);
  if (eres.status == LpStatus::Infeasible) {
    if (!exact_farkas_ok(exact.lp, eres.farkas))
      throw std::logic_error("exact simplex produced an invalid certificate");
    res.balanced = false;
    res.certified = true;
    res.certificate_exact = eres.farkas;
    res.certificate.reserve(eres.farkas.size());
    for (const auto& y : eres.farkas) res.certificate.push_back(to_double(y));
    return res;
  }
  if (!exact_solution_ok(exact.lp, eres.solution))
    throw std::logic_error("exact simplex produced an invalid witness");
  res.balanced = true;
  res.certified = true;
  std::vector<double> xd(eres.solution.size());
  for (size_t k = 0; k < xd.size(); ++k) xd[k] = to_double(eres.solution[k]);
  res.witness = witness_from(built.contact_list, xd);
  for (size_t k = 0; k < res.witness.size(); ++k)
    res.witness[k].magnitude_exact = eres.solution[k];
  return res;
}

StabilizingWeights min_stabilizing_weight(const Stack& stack, const PlacementRule& rule) {
  BalanceLp built = build_balance_lp(stack);
  LpProblem<double>& lp = built.lp;

  // Candidate sites; a weight free to sit anywhere on a segment is
  // equivalent to two weights at the segment's endpoints.
  std::vector<std::pair<int, double>> sites;
  if (!rule.explicit_sites.empty() || !rule.upper_edges_outside_contacts) {
    sites = rule.explicit_sites;
  } else {
    std::vector<std::vector<std::pair<double, double>>> covered(stack.size());
    for (const auto& c : built.contact_list)
      if (c.lower != kTable) covered[c.lower].push_back({c.a, c.b});
    for (int i = 0; i < stack.size(); ++i) {
      auto& iv = covered[i];
      std::sort(iv.begin(), iv.end());
      double cur = stack.blocks[i].x;
      double right = stack.blocks[i].x + 1.0;
      for (const auto& [a, b] : iv) {
        if (a > cur) {
          sites.push_back({i, cur});
          sites.push_back({i, a});
        }
        cur = std::max(cur, b);
      }
      if (cur < right) {
        sites.push_back({i, cur});
        sites.push_back({i, right});
      }
    }
  }

  int base = lp.num_vars;
  for (const auto& [blk, pos] : sites) {
    int v = lp.add_var();
    lp.equalities[2 * blk].coeffs.push_back({v, -1.0});
    lp.equalities[2 * blk + 1].coeffs.push_back({v, -pos});
  }
  lp.objective.assign(lp.num_vars, 0.0);
  for (int v = base; v < lp.num_vars; ++v) lp.objective[v] = 1.0;

  auto res = lp_solve(lp, 1e-11);
  if (res.status == LpStatus::Infeasible)
    throw Unstabilizable("no finite added weight balances this stack");
  StabilizingWeights out;
  out.total = res.objective_value;
  for (size_t k = 0; k < sites.size(); ++k) {
    double m = res.solution[base + k];
    if (m > 1e-12)
      out.placement.emplace_back(sites[k].first, sites[k].second, m);
  }
  return out;
}

bool is_strictly_stable(const Stack& stack, double margin, double tol) {
  if (margin <= 0.0) throw std::invalid_argument("margin must be positive");
  BalanceLp built = build_balance_lp(stack);
  LpProblem<double>& lp = built.lp;
  for (size_t k = 0; k < built.contact_list.size(); ++k) {
    const Contact& c = built.contact_list[k];
    double len = c.b - c.a;
    int v0 = static_cast<int>(2 * k), v1 = v0 + 1;
    // Resultant at distance >= margin from either endpoint:
    // len * f_far >= margin * (f0 + f1).
    LpProblem<double>::Row r0, r1;
    r0.coeffs = {{v1, len - margin}, {v0, -margin}};
    r0.rhs = 0.0;
    r1.coeffs = {{v0, len - margin}, {v1, -margin}};
    r1.rhs = 0.0;
    lp.inequalities.push_back(r0);
    lp.inequalities.push_back(r1);
  }
  auto res = lp_solve(lp, 1e-11);
  return res.status != LpStatus::Infeasible || res.infeasibility <= tol;
}

std::string dump_lp(const BalanceLp& built) {
  std::ostringstream out;
  out << "vars " << built.lp.num_vars << " (2 per contact, " << built.contact_list.size()
      << " contacts)\n";
  for (size_t r = 0; r < built.lp.equalities.size(); ++r) {
    const auto& row = built.lp.equalities[r];
    out << (r % 2 == 0 ? "force" : "moment") << " block " << r / 2 << ": ";
    for (const auto& [j, c] : row.coeffs) out << (c < 0 ? "- " : "+ ") << std::abs(c) << " f" << j << " ";
    out << "= " << row.rhs << "\n";
  }
  return out.str();
}

}  // namespace overhang
