#include "zonoconform/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace zonoconform {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kCostTol = 1e-9;

enum VarState : char { kAtLower, kAtUpper, kAtZero, kBasic };

struct Tableau {
  Index rows;
  Index cols;          // structurals + slacks + artificials
  Matrix t;            // rows x cols, holds B^-1 * A_full
  Vector basic_value;  // current values of basic variables
  Vector cost;         // reduced cost row for the active phase
  Vector lower, upper;
  std::vector<VarState> state;
  std::vector<Index> basis;  // variable basic in each row

  double nonbasic_value(Index j) const {
    switch (state[j]) {
      case kAtLower: return lower[j];
      case kAtUpper: return upper[j];
      default: return 0.0;
    }
  }

  bool fixed(Index j) const { return lower[j] == upper[j]; }

  void pivot(Index row, Index col) {
    const double piv = t(row, col);
    t.row(row) /= piv;
    for (Index i = 0; i < rows; ++i) {
      if (i == row) continue;
      const double f = t(i, col);
      if (f != 0.0) t.row(i) -= f * t.row(row);
    }
    const double cf = cost[col];
    if (cf != 0.0) cost -= cf * t.row(row).transpose();
  }
};

// Entering column under the active pricing rule, or -1 at optimality.
Index price(const Tableau& tab, bool bland) {
  Index best = -1;
  double best_score = kCostTol;
  for (Index j = 0; j < tab.cols; ++j) {
    if (tab.state[j] == kBasic || tab.fixed(j)) continue;
    const double d = tab.cost[j];
    double score = 0.0;
    if (tab.state[j] == kAtUpper) {
      if (d > kCostTol) score = d;
    } else {  // at lower bound or free at zero
      if (d < -kCostTol) score = -d;
      if (tab.state[j] == kAtZero && d > kCostTol) score = d;
    }
    if (score > kCostTol) {
      if (bland) return j;
      if (score > best_score) {
        best_score = score;
        best = j;
      }
    }
  }
  return best;
}

// One simplex phase. Returns false on unboundedness.
bool run_phase(Tableau& tab, long max_iter) {
  bool bland = false;
  long stall = 0;
  for (long iter = 0; iter < max_iter; ++iter) {
    const Index enter = price(tab, bland);
    if (enter < 0) return true;

    // Direction of travel for the entering variable.
    double sign = 1.0;
    if (tab.state[enter] == kAtUpper) sign = -1.0;
    if (tab.state[enter] == kAtZero && tab.cost[enter] > kCostTol) sign = -1.0;

    // Ratio test: basic variables hit a bound, or the entering variable
    // reaches its opposite bound (a bound flip).
    double t_max = kLpInfinity;
    if (std::isfinite(tab.lower[enter]) && std::isfinite(tab.upper[enter]))
      t_max = tab.upper[enter] - tab.lower[enter];
    Index leave_row = -1;
    bool leave_at_upper = false;
    for (Index i = 0; i < tab.rows; ++i) {
      const double y = sign * tab.t(i, enter);
      const Index bi = tab.basis[i];
      if (y > kPivotTol && std::isfinite(tab.lower[bi])) {
        const double step = (tab.basic_value[i] - tab.lower[bi]) / y;
        if (step < t_max - kPivotTol ||
            (step < t_max + kPivotTol && (leave_row < 0 || bi < tab.basis[leave_row]))) {
          t_max = std::max(step, 0.0);
          leave_row = i;
          leave_at_upper = false;
        }
      } else if (y < -kPivotTol && std::isfinite(tab.upper[bi])) {
        const double step = (tab.basic_value[i] - tab.upper[bi]) / y;
        if (step < t_max - kPivotTol ||
            (step < t_max + kPivotTol && (leave_row < 0 || bi < tab.basis[leave_row]))) {
          t_max = std::max(step, 0.0);
          leave_row = i;
          leave_at_upper = true;
        }
      }
    }

    if (!std::isfinite(t_max)) return false;  // unbounded ray

    if (t_max < kPivotTol) {
      if (++stall > 2 * (tab.rows + tab.cols)) bland = true;
    } else {
      stall = 0;
    }

    // Move the entering variable by t_max and update basics.
    const double enter_value = tab.nonbasic_value(enter) + sign * t_max;
    if (t_max > 0.0)
      tab.basic_value -= sign * t_max * tab.t.col(enter);

    if (leave_row < 0) {
      // Bound flip: no basis change.
      tab.state[enter] = (sign > 0) ? kAtUpper : kAtLower;
      continue;
    }

    const Index leave_var = tab.basis[leave_row];
    tab.state[leave_var] = leave_at_upper ? kAtUpper : kAtLower;
    tab.basic_value[leave_row] = enter_value;
    tab.state[enter] = kBasic;
    tab.basis[leave_row] = enter;
    tab.pivot(leave_row, enter);
  }
  throw std::runtime_error("simplex: iteration limit exceeded");
}

}  // namespace

LpProblem LpProblem::make(Index rows, Index cols) {
  LpProblem p;
  p.a = Matrix::Zero(rows, cols);
  p.b = Vector::Zero(rows);
  p.c = Vector::Zero(cols);
  p.rel.assign(static_cast<size_t>(rows), '=');
  p.lower = Vector::Constant(cols, -kLpInfinity);
  p.upper = Vector::Constant(cols, kLpInfinity);
  return p;
}

LpSolution solve_lp(const LpProblem& problem) {
  const Index m = problem.a.rows();
  const Index n = problem.a.cols();
  check_arg(problem.b.size() == m && static_cast<Index>(problem.rel.size()) == m,
            "solve_lp: inconsistent row counts");
  check_arg(problem.c.size() == n && problem.lower.size() == n && problem.upper.size() == n,
            "solve_lp: inconsistent column counts");

  // Layout: [structurals | one slack per row | one artificial per row].
  const Index n_total = n + 2 * m;
  Tableau tab;
  tab.rows = m;
  tab.cols = n_total;
  tab.t = Matrix::Zero(m, n_total);
  tab.t.leftCols(n) = problem.a;
  tab.lower = Vector::Zero(n_total);
  tab.upper = Vector::Zero(n_total);
  tab.lower.head(n) = problem.lower;
  tab.upper.head(n) = problem.upper;
  tab.state.assign(static_cast<size_t>(n_total), kAtLower);
  tab.basis.resize(static_cast<size_t>(m));

  for (Index i = 0; i < m; ++i) {
    const Index s = n + i;
    tab.t(i, s) = 1.0;
    switch (problem.rel[static_cast<size_t>(i)]) {
      case '<': tab.lower[s] = 0.0; tab.upper[s] = kLpInfinity; break;
      case '>': tab.lower[s] = -kLpInfinity; tab.upper[s] = 0.0; tab.state[s] = kAtUpper; break;
      case '=': tab.lower[s] = 0.0; tab.upper[s] = 0.0; break;
      default: throw std::invalid_argument("solve_lp: bad row relation");
    }
  }

  // Nonbasic starting values: finite bound nearest zero, or zero when free.
  for (Index j = 0; j < n; ++j) {
    const double lo = tab.lower[j], up = tab.upper[j];
    if (std::isfinite(lo) && std::isfinite(up))
      tab.state[j] = (std::abs(up) < std::abs(lo)) ? kAtUpper : kAtLower;
    else if (std::isfinite(lo))
      tab.state[j] = kAtLower;
    else if (std::isfinite(up))
      tab.state[j] = kAtUpper;
    else
      tab.state[j] = kAtZero;
  }

  // Phase 1: artificial basis absorbing the residual of the start point.
  Vector residual = problem.b;
  for (Index j = 0; j < n + m; ++j) {
    const double v = tab.nonbasic_value(j);
    if (v != 0.0) residual -= v * tab.t.col(j);
  }
  tab.basic_value = residual.cwiseAbs();
  for (Index i = 0; i < m; ++i) {
    const Index a = n + m + i;
    const double sgn = (residual[i] < 0.0) ? -1.0 : 1.0;
    tab.t(i, a) = sgn;
    tab.lower[a] = 0.0;
    tab.upper[a] = kLpInfinity;
    tab.state[a] = kBasic;
    tab.basis[static_cast<size_t>(i)] = a;
    if (sgn < 0.0) tab.t.row(i) *= -1.0;  // keep B^-1*A consistent
    tab.t(i, a) = 1.0;
  }

  // Reduced costs under the artificial basis: d_j = c1_j - sum over rows of
  // T_ij with c1 = 1 on artificials. Identity columns come out as exactly 0.
  tab.cost = Vector::Zero(n_total);
  tab.cost.tail(m).setConstant(1.0);
  tab.cost -= tab.t.colwise().sum().transpose();

  const long max_iter = 200 * (m + n_total) + 20000;
  run_phase(tab, max_iter);

  const double infeasibility = [&] {
    double s = 0.0;
    for (Index i = 0; i < m; ++i)
      if (tab.basis[static_cast<size_t>(i)] >= n + m) s += std::abs(tab.basic_value[i]);
    for (Index j = n + m; j < n_total; ++j)
      if (tab.state[j] != kBasic) s += std::abs(tab.nonbasic_value(j));
    return s;
  }();
  const double feas_tol = 1e-8 * (1.0 + problem.b.cwiseAbs().maxCoeff());
  LpSolution sol;
  if (infeasibility > feas_tol) {
    sol.status = LpStatus::kInfeasible;
    return sol;
  }

  // Pin artificials at zero and try to pivot them out of the basis.
  for (Index j = n + m; j < n_total; ++j) {
    tab.lower[j] = 0.0;
    tab.upper[j] = 0.0;
  }
  for (Index i = 0; i < m; ++i) {
    if (tab.basis[static_cast<size_t>(i)] < n + m) continue;
    Index piv = -1;
    double best = kPivotTol;
    for (Index j = 0; j < n + m; ++j) {
      if (tab.state[j] == kBasic) continue;
      if (std::abs(tab.t(i, j)) > best) {
        best = std::abs(tab.t(i, j));
        piv = j;
      }
    }
    if (piv >= 0) {
      const Index art = tab.basis[static_cast<size_t>(i)];
      tab.state[art] = kAtLower;
      tab.state[piv] = kBasic;
      tab.basis[static_cast<size_t>(i)] = piv;
      tab.basic_value[i] = tab.nonbasic_value(piv);
      tab.pivot(i, piv);
    }
    // Otherwise the row is redundant; its artificial stays basic at zero and
    // no other column intersects the row, so it can never move again.
  }

  // Phase 2 with the real objective.
  tab.cost = Vector::Zero(n_total);
  tab.cost.head(n) = problem.c;
  for (Index i = 0; i < m; ++i) {
    const Index bi = tab.basis[static_cast<size_t>(i)];
    if (bi < n && problem.c[bi] != 0.0) tab.cost -= problem.c[bi] * tab.t.row(i).transpose();
  }
  // Basic columns' reduced costs are exactly zero by construction.
  for (Index i = 0; i < m; ++i) tab.cost[tab.basis[static_cast<size_t>(i)]] = 0.0;

  if (!run_phase(tab, max_iter)) {
    sol.status = LpStatus::kUnbounded;
    return sol;
  }

  sol.status = LpStatus::kOptimal;
  sol.x = Vector::Zero(n);
  for (Index j = 0; j < n; ++j)
    if (tab.state[j] != kBasic) sol.x[j] = tab.nonbasic_value(j);
  for (Index i = 0; i < m; ++i) {
    const Index bi = tab.basis[static_cast<size_t>(i)];
    if (bi < n) sol.x[bi] = tab.basic_value[i];
  }
  sol.objective = problem.c.dot(sol.x);
  return sol;
}

}  // namespace zonoconform
