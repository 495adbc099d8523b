#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

namespace overhang {

// Linear program over nonnegative variables:
//   minimize objective . x   (feasibility check when objective is empty)
//   subject to  sum coeffs . x  = rhs   (equalities)
//               sum coeffs . x >= rhs   (inequalities)
//               x >= 0
template <class T>
struct LpProblem {
  struct Row {
    std::vector<std::pair<int, T>> coeffs;
    T rhs{};
  };
  int num_vars = 0;
  std::vector<Row> equalities;
  std::vector<Row> inequalities;
  std::vector<T> objective;  // dense, size num_vars, or empty

  int add_var() { return num_vars++; }
};

enum class LpStatus { Feasible, Optimal, Infeasible, Unbounded };

template <class T>
struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<T> solution;       // size num_vars when (f)easible
  T objective_value{};
  // Farkas certificate over the rows (equalities then inequalities):
  // y.A <= 0 componentwise on every variable column, y.b > 0.
  std::vector<T> farkas;
  // Basic column per structural row after conversion to equalities;
  // -1 marks a row whose basic variable is artificial (redundant row).
  std::vector<int> basis;
  T infeasibility{};  // phase-one optimum
};

// Dense two-phase simplex. Bland's rule when `eps` is zero (exact mode,
// guaranteed termination), Dantzig's rule with a Bland fallback otherwise.
template <class T>
class Simplex {
 public:
  explicit Simplex(const LpProblem<T>& p, T eps = T{}) : eps_(eps) {
    n_ = p.num_vars;
    // Inequalities get surplus variables: a.x - s = rhs, s >= 0.
    num_slack_ = static_cast<int>(p.inequalities.size());
    m_ = static_cast<int>(p.equalities.size() + p.inequalities.size());
    cols_ = n_ + num_slack_ + m_ + 1;  // structural + slack + artificial + rhs
    tab_.assign(static_cast<size_t>(m_ + 1) * cols_, T{});
    basis_.resize(m_);
    row_sign_.assign(m_, 1);

    int r = 0;
    for (const auto& row : p.equalities) fill_row(r++, row, -1);
    for (int k = 0; k < num_slack_; ++k) fill_row(r++, p.inequalities[k], k);
    for (int i = 0; i < m_; ++i) {
      at(i, n_ + num_slack_ + i) = T(1);
      basis_[i] = n_ + num_slack_ + i;
    }
    objective_ = p.objective;
  }

  LpResult<T> solve() {
    LpResult<T> res;
    // Phase one: price out the artificials.
    {
      std::vector<T>& z = cost_row_;
      z.assign(cols_, T{});
      for (int i = 0; i < m_; ++i)
        for (int j = 0; j < cols_; ++j) z[j] -= at(i, j);
      for (int i = 0; i < m_; ++i) z[n_ + num_slack_ + i] = T{};
      run(n_ + num_slack_);
      T infeas = -z[cols_ - 1];
      res.infeasibility = infeas;
      if (infeas > eps_) {
        res.status = LpStatus::Infeasible;
        res.farkas.resize(m_);
        // Reduced cost of artificial i is 1 - y_i (cost 1, column e_i).
        for (int i = 0; i < m_; ++i)
          res.farkas[i] = row_sign_[i] * (T(1) - z[n_ + num_slack_ + i]);
        return res;
      }
    }
    drive_out_artificials();

    if (!objective_.empty()) {
      std::vector<T>& z = cost_row_;
      z.assign(cols_, T{});
      for (int j = 0; j < n_; ++j) z[j] = objective_[j];
      for (int i = 0; i < m_; ++i) {
        if (basis_[i] < n_ && objective_[basis_[i]] != T{}) {
          T c = objective_[basis_[i]];
          for (int j = 0; j < cols_; ++j) z[j] -= c * at(i, j);
        }
      }
      for (int i = 0; i < m_; ++i) z[n_ + num_slack_ + i] = T{};  // keep shut
      if (!run(n_ + num_slack_)) {
        res.status = LpStatus::Unbounded;
        extract_solution(res);
        return res;
      }
      res.status = LpStatus::Optimal;
      extract_solution(res);
      T obj{};
      for (int j = 0; j < n_; ++j) obj += objective_[j] * res.solution[j];
      res.objective_value = obj;
      return res;
    }
    res.status = LpStatus::Feasible;
    extract_solution(res);
    return res;
  }

 private:
  T& at(int r, int c) { return tab_[static_cast<size_t>(r) * cols_ + c]; }

  void fill_row(int r, const typename LpProblem<T>::Row& row, int slack) {
    for (const auto& [j, v] : row.coeffs) at(r, j) += v;
    if (slack >= 0) at(r, n_ + slack) = T(-1);
    at(r, cols_ - 1) = row.rhs;
    if (at(r, cols_ - 1) < T{}) {
      for (int j = 0; j < cols_ - 1; ++j) at(r, j) = -at(r, j);
      at(r, cols_ - 1) = -at(r, cols_ - 1);
      row_sign_[r] = -1;
    }
  }

  // Minimizes cost_row_ over columns [0, limit). Returns false on
  // unboundedness.
  bool run(int limit) {
    std::vector<T>& z = cost_row_;
    long iter = 0;
    const long bland_after = 4L * (m_ + limit);
    while (true) {
      ++iter;
      bool bland = (eps_ == T{}) || iter > bland_after;
      int enter = -1;
      if (bland) {
        for (int j = 0; j < limit; ++j)
          if (z[j] < -eps_) {
            enter = j;
            break;
          }
      } else {
        T best{};
        for (int j = 0; j < limit; ++j)
          if (z[j] < best) {
            best = z[j];
            enter = j;
          }
        if (enter >= 0 && !(z[enter] < -eps_)) enter = -1;
      }
      if (enter < 0) return true;

      int leave = -1;
      bool have_ratio = false;
      T best_num{}, best_den{};
      for (int i = 0; i < m_; ++i) {
        const T& a = at(i, enter);
        if (a > eps_) {
          const T& b = at(i, cols_ - 1);
          // Compare b/a with best ratio; ties to smallest basis index
          // (Bland) for termination.
          bool better = false;
          if (!have_ratio) {
            better = true;
          } else {
            T lhs = b * best_den, rhs = best_num * a;
            if (lhs < rhs)
              better = true;
            else if (lhs == rhs && basis_[i] < basis_[leave])
              better = true;
          }
          if (better) {
            leave = i;
            best_num = b;
            best_den = a;
            have_ratio = true;
          }
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void pivot(int r, int c) {
    T inv = T(1) / at(r, c);
    T* prow = &tab_[static_cast<size_t>(r) * cols_];
    for (int j = 0; j < cols_; ++j) prow[j] *= inv;
    prow[c] = T(1);
    for (int i = 0; i <= m_; ++i) {
      T* row = (i == m_) ? cost_row_.data() : &tab_[static_cast<size_t>(i) * cols_];
      if (i == r) continue;
      T f = row[c];
      if (f == T{}) continue;
      for (int j = 0; j < cols_; ++j) row[j] -= f * prow[j];
      row[c] = T{};
    }
    basis_[r] = c;
  }

  // After phase one, swap basic artificials (value 0) for structural
  // columns where possible so the basis describes the structural system.
  void drive_out_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_ + num_slack_) continue;
      int c = -1;
      for (int j = 0; j < n_ + num_slack_; ++j) {
        const T& a = at(i, j);
        if (a > eps_ || a < -eps_) {
          c = j;
          break;
        }
      }
      if (c >= 0) pivot(i, c);  // rhs is 0: degenerate, feasibility kept
    }
  }

  void extract_solution(LpResult<T>& res) {
    res.solution.assign(n_, T{});
    res.basis.assign(m_, -1);
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) res.solution[basis_[i]] = at(i, cols_ - 1);
      if (basis_[i] < n_ + num_slack_) res.basis[i] = basis_[i];
    }
  }

  int n_ = 0, m_ = 0, num_slack_ = 0, cols_ = 0;
  T eps_{};
  std::vector<T> tab_;
  std::vector<T> cost_row_;
  std::vector<int> basis_;
  std::vector<int> row_sign_;
  std::vector<T> objective_;
};

template <class T>
LpResult<T> lp_solve(const LpProblem<T>& p, T eps = T{}) {
  return Simplex<T>(p, eps).solve();
}

// Solves the equality system restricted to the given structural columns
// (a candidate basis from a floating-point solve) by sparse exact
// elimination. Returns the full solution vector (zeros off the basis) when
// the system is consistent and uniquely determined on those columns.
template <class T>
std::optional<std::vector<T>> solve_on_columns(const LpProblem<T>& p,
                                               const std::vector<int>& cols) {
  int m = static_cast<int>(p.equalities.size() + p.inequalities.size());
  std::vector<std::unordered_map<int, T>> rows(m);
  std::vector<T> rhs(m);
  std::vector<char> wanted(p.num_vars + static_cast<int>(p.inequalities.size()), 0);
  for (int c : cols)
    if (c >= 0) wanted[c] = 1;
  int r = 0;
  auto add_row = [&](const typename LpProblem<T>::Row& row, int slack) {
    for (const auto& [j, v] : row.coeffs) {
      if (!wanted[j]) continue;
      auto [it, fresh] = rows[r].try_emplace(j, v);
      if (!fresh) it->second += v;
    }
    if (slack >= 0 && wanted[p.num_vars + slack])
      rows[r][p.num_vars + slack] = T(-1);
    rhs[r] = row.rhs;
    ++r;
  };
  for (const auto& row : p.equalities) add_row(row, -1);
  for (size_t k = 0; k < p.inequalities.size(); ++k)
    add_row(p.inequalities[k], static_cast<int>(k));

  std::vector<std::pair<int, int>> pivots;  // (row, column) per elimination
  std::vector<char> done(m, 0);
  for (int c : cols) {
    if (c < 0) continue;
    // Pick the sparsest remaining row containing column c.
    int pr = -1;
    size_t best = SIZE_MAX;
    for (int i = 0; i < m; ++i) {
      if (done[i]) continue;
      auto it = rows[i].find(c);
      if (it != rows[i].end() && it->second != T{} && rows[i].size() < best) {
        best = rows[i].size();
        pr = i;
      }
    }
    if (pr < 0) return std::nullopt;  // column vanished: dependent basis
    done[pr] = 1;
    T pv = rows[pr][c];
    for (int i = 0; i < m; ++i) {
      if (i == pr) continue;
      auto it = rows[i].find(c);
      if (it == rows[i].end() || it->second == T{}) continue;
      T f = it->second / pv;
      for (const auto& [j, v] : rows[pr]) {
        if (j == c) continue;
        auto [jt, fresh] = rows[i].try_emplace(j, T{});
        jt->second -= f * v;
        if (jt->second == T{}) rows[i].erase(jt);
      }
      rhs[i] -= f * rhs[pr];
      rows[i].erase(c);
    }
    pivots.emplace_back(pr, c);
  }
  // Untouched rows must have become 0 = 0, else inconsistent.
  for (int i = 0; i < m; ++i)
    if (!done[i] && rhs[i] != T{}) return std::nullopt;

  std::vector<T> x(p.num_vars + p.inequalities.size(), T{});
  for (const auto& [pr, c] : pivots) {
    // Row pr now holds pivot column c (plus columns never eliminated,
    // which are all nonbasic = 0).
    x[c] = rhs[pr] / rows[pr][c];
  }
  x.resize(p.num_vars + p.inequalities.size());
  return x;
}

}  // namespace overhang
