#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "cohdeals/errors.hpp"
#include "cohdeals/numerics.hpp"

namespace cohdeals {

// Dense linear programming in the form
//   minimize    c . x
//   subject to  A_eq x  = b_eq
//               A_ub x <= b_ub
//               lo <= x <= hi        (entries may be +-inf)
//
// Solved by a two-phase primal simplex with implicit variable bounds.
// Upper-bound rows receive slack variables; bounds never become rows, which
// keeps the tableau short even when the variable count is large.

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kNumericalFailure };

struct LinearProgram {
  std::vector<double> c;
  Mat a_eq;
  std::vector<double> b_eq;
  Mat a_ub;
  std::vector<double> b_ub;
  std::vector<double> lo, hi;

  std::size_t num_vars() const { return c.size(); }

  static LinearProgram with_vars(std::size_t n) {
    LinearProgram lp;
    lp.c.assign(n, 0.0);
    lp.lo.assign(n, -kInf);
    lp.hi.assign(n, kInf);
    lp.a_eq = Mat(0, n);
    lp.a_ub = Mat(0, n);
    return lp;
  }
};

/// Result of a solve.
///
/// Dual conventions (status kOptimal): with r_j = c_j - dual_eq.A_eq[:,j]
/// + dual_ub.A_ub[:,j], optimality means r_j >= 0 for x_j at its lower
/// bound, r_j <= 0 at its upper bound, r_j = 0 otherwise; dual_ub >= 0;
/// the optimum responds to right-hand-side perturbations as
/// d(obj) = dual_eq . d(b_eq) - dual_ub . d(b_ub).
///
/// When status is kInfeasible, (dual_eq, dual_ub) hold a Farkas certificate:
/// dual_ub >= 0 and  dual_eq.(b_eq - A_eq x) + dual_ub.(b_ub - A_ub x) < 0
/// for every x inside the variable box, while any feasible x would make the
/// expression nonnegative.
///
/// When status is kUnbounded, `ray` is a feasible direction with c.ray < 0.
struct LpSolution {
  LpStatus status = LpStatus::kNumericalFailure;
  std::vector<double> x;
  double objective = 0.0;
  std::vector<double> dual_eq;
  std::vector<double> dual_ub;
  std::vector<double> ray;
  int iterations = 0;
};

namespace lpdetail {

enum class VStat : unsigned char { kBasic, kAtLower, kAtUpper, kFreeZero, kFixed };

class BoundedSimplex {
 public:
  BoundedSimplex(const LinearProgram& lp, bool bland) : lp_(lp), bland_(bland) {
    n0_ = lp.num_vars();
    me_ = lp.a_eq.rows();
    mu_ = lp.a_ub.rows();
    m_ = me_ + mu_;
    ns_ = n0_ + mu_;   // structural + slack
    nt_ = ns_ + m_;    // + artificial
    build();
  }

  LpSolution run() {
    LpSolution sol;
    // Phase 1: minimize the sum of artificial variables.
    set_phase_cost(true);
    const Step s1 = iterate();
    if (s1 == Step::kIterLimit || s1 == Step::kUnbounded) return fail(sol);
    if (phase_objective() > 1e-7 * (1.0 + bscale_)) {
      extract_farkas(sol);
      sol.status = LpStatus::kInfeasible;
      sol.iterations = iters_;
      return sol;
    }
    drive_out_artificials();
    for (std::size_t j = ns_; j < nt_; ++j) { lo_[j] = 0.0; hi_[j] = 0.0; }
    for (std::size_t j = ns_; j < nt_; ++j)
      if (vstat_[j] != VStat::kBasic) { vstat_[j] = VStat::kFixed; xval_[j] = 0.0; }

    // Phase 2: original objective.
    set_phase_cost(false);
    const Step s2 = iterate();
    if (s2 == Step::kIterLimit) return fail(sol);
    if (s2 == Step::kUnbounded) {
      extract_ray(sol);
      sol.status = LpStatus::kUnbounded;
      sol.iterations = iters_;
      return sol;
    }
    if (!extract_optimum(sol)) return fail(sol);
    sol.status = LpStatus::kOptimal;
    sol.iterations = iters_;
    return sol;
  }

 private:
  enum class Step { kOptimal, kUnbounded, kIterLimit };

  const LinearProgram& lp_;
  bool bland_ = false;
  std::size_t n0_ = 0, me_ = 0, mu_ = 0, m_ = 0, ns_ = 0, nt_ = 0;

  std::vector<double> tab_;       // m x nt tableau, row-major: B^{-1} [A | E]
  std::vector<double> red_;       // reduced costs for the active phase
  std::vector<double> cost_;      // active phase cost over all columns
  std::vector<double> lo_, hi_;   // bounds over all columns
  std::vector<double> xval_;      // nonbasic values
  std::vector<double> xb_;        // basic values by row
  std::vector<int> basis_;        // column basic in each row
  std::vector<VStat> vstat_;
  std::vector<double> rowsign_;   // +-1 scaling applied to each row
  std::vector<double> brhs_;      // scaled right-hand side
  double bscale_ = 1.0;
  bool phase1_ = true;
  int iters_ = 0;
  std::size_t price_pos_ = 0;
  // entering ray direction saved when unbounded
  std::size_t ray_col_ = 0;
  double ray_dir_ = 1.0;

  double& tab(std::size_t i, std::size_t j) { return tab_[i * nt_ + j]; }
  double tab(std::size_t i, std::size_t j) const { return tab_[i * nt_ + j]; }

  // Original scaled column entry of [A | E] (constraint matrix incl. slack
  // and artificial blocks), used for the final refactorization.
  double orig_col(std::size_t i, std::size_t j) const {
    double v = 0.0;
    if (j < n0_) {
      v = (i < me_) ? lp_.a_eq(i, j) : lp_.a_ub(i - me_, j);
    } else if (j < ns_) {
      v = (i >= me_ && (j - n0_) == (i - me_)) ? 1.0 : 0.0;
    } else {
      return (j - ns_) == i ? 1.0 : 0.0;  // artificial: identity after scaling
    }
    return rowsign_[i] * v;
  }

  void build() {
    lo_.assign(nt_, 0.0);
    hi_.assign(nt_, kInf);
    for (std::size_t j = 0; j < n0_; ++j) { lo_[j] = lp_.lo[j]; hi_[j] = lp_.hi[j]; }
    // slacks: [0, inf); artificials: [0, inf) during phase 1.

    xval_.assign(nt_, 0.0);
    vstat_.assign(nt_, VStat::kAtLower);
    for (std::size_t j = 0; j < ns_; ++j) {
      if (lo_[j] == hi_[j]) { vstat_[j] = VStat::kFixed; xval_[j] = lo_[j]; }
      else if (std::isfinite(lo_[j])) { vstat_[j] = VStat::kAtLower; xval_[j] = lo_[j]; }
      else if (std::isfinite(hi_[j])) { vstat_[j] = VStat::kAtUpper; xval_[j] = hi_[j]; }
      else { vstat_[j] = VStat::kFreeZero; xval_[j] = 0.0; }
    }

    // Residuals at the initial nonbasic point fix the row signs so every
    // artificial starts nonnegative.
    rowsign_.assign(m_, 1.0);
    brhs_.assign(m_, 0.0);
    bscale_ = 1.0;
    std::vector<double> resid(m_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      double b = (i < me_) ? lp_.b_eq[i] : lp_.b_ub[i - me_];
      bscale_ = std::max(bscale_, std::abs(b));
      double ax = 0.0;
      for (std::size_t j = 0; j < n0_; ++j) {
        const double a = (i < me_) ? lp_.a_eq(i, j) : lp_.a_ub(i - me_, j);
        if (a != 0.0) ax += a * xval_[j];
      }
      if (i >= me_) ax += xval_[n0_ + (i - me_)];
      resid[i] = b - ax;
      rowsign_[i] = (resid[i] >= 0.0) ? 1.0 : -1.0;
      brhs_[i] = rowsign_[i] * b;
    }

    tab_.assign(m_ * nt_, 0.0);
    basis_.assign(m_, 0);
    xb_.assign(m_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n0_; ++j) {
        const double a = (i < me_) ? lp_.a_eq(i, j) : lp_.a_ub(i - me_, j);
        if (a != 0.0) tab(i, j) = rowsign_[i] * a;
      }
      if (i >= me_) tab(i, n0_ + (i - me_)) = rowsign_[i];
      tab(i, ns_ + i) = 1.0;
      basis_[i] = static_cast<int>(ns_ + i);
      vstat_[ns_ + i] = VStat::kBasic;
      xb_[i] = rowsign_[i] * resid[i];
    }
  }

  void set_phase_cost(bool phase1) {
    phase1_ = phase1;
    cost_.assign(nt_, 0.0);
    if (phase1) {
      for (std::size_t j = ns_; j < nt_; ++j) cost_[j] = 1.0;
    } else {
      for (std::size_t j = 0; j < n0_; ++j) cost_[j] = lp_.c[j];
    }
    recompute_reduced_costs();
  }

  // y_i = c_B B^{-1} e_i read through the artificial block, then
  // r = c - y [A|E].
  void recompute_reduced_costs() {
    std::vector<double> y(m_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      double acc = 0.0;
      for (std::size_t k = 0; k < m_; ++k) {
        const double cb = cost_[basis_[k]];
        if (cb != 0.0) acc += cb * tab(k, ns_ + i);
      }
      y[i] = acc;
    }
    red_.assign(nt_, 0.0);
    for (std::size_t j = 0; j < nt_; ++j) {
      if (vstat_[j] == VStat::kBasic) { red_[j] = 0.0; continue; }
      double acc = cost_[j];
      for (std::size_t i = 0; i < m_; ++i) {
        const double a = orig_col(i, j);
        if (a != 0.0) acc -= y[i] * a;
      }
      red_[j] = acc;
    }
  }

  double phase_objective() const {
    double acc = 0.0;
    for (std::size_t i = 0; i < m_; ++i) acc += cost_[basis_[i]] * xb_[i];
    for (std::size_t j = 0; j < nt_; ++j)
      if (vstat_[j] != VStat::kBasic && cost_[j] != 0.0) acc += cost_[j] * xval_[j];
    return acc;
  }

  bool eligible(std::size_t j, double tol, int* dir) const {
    if (vstat_[j] == VStat::kBasic || vstat_[j] == VStat::kFixed) return false;
    if (!phase1_ && j >= ns_) return false;
    const double r = red_[j];
    switch (vstat_[j]) {
      case VStat::kAtLower:
        if (r < -tol) { *dir = +1; return true; }
        return false;
      case VStat::kAtUpper:
        if (r > tol) { *dir = -1; return true; }
        return false;
      case VStat::kFreeZero:
        if (r < -tol) { *dir = +1; return true; }
        if (r > tol) { *dir = -1; return true; }
        return false;
      default:
        return false;
    }
  }

  // Rotating-window Dantzig pricing; full scan when the window is dry, so a
  // declared optimum always rests on a complete pass.
  bool price(std::size_t* enter, int* dir, double tol) {
    if (bland_) {
      for (std::size_t j = 0; j < nt_; ++j) {
        int d;
        if (eligible(j, tol, &d)) { *enter = j; *dir = d; return true; }
      }
      return false;
    }
    const std::size_t window = 1024;
    std::size_t scanned = 0;
    while (scanned < nt_) {
      std::size_t best = nt_;
      int bestdir = 0;
      double bestmag = tol;
      const std::size_t begin = price_pos_;
      for (std::size_t t = 0; t < window && scanned < nt_; ++t, ++scanned) {
        const std::size_t j = (begin + t) % nt_;
        int d;
        if (eligible(j, tol, &d) && std::abs(red_[j]) > bestmag) {
          bestmag = std::abs(red_[j]);
          best = j;
          bestdir = d;
        }
      }
      price_pos_ = (begin + std::min(window, nt_)) % nt_;
      if (best != nt_) { *enter = best; *dir = bestdir; return true; }
    }
    return false;
  }

  Step iterate() {
    const double rtol = 1e-9 * (1.0 + cost_scale());
    const long max_iters = 2000 + 40 * static_cast<long>(m_ + std::min<std::size_t>(ns_, 50000));
    long stall = 0;
    double last_obj = phase_objective();
    for (long it = 0; it < max_iters; ++it) {
      std::size_t enter;
      int dir;
      if (!price(&enter, &dir, rtol)) return Step::kOptimal;
      ++iters_;

      // Ratio test against basic-variable bounds and the entering bound gap.
      const double eps = 1e-11;
      double theta = kInf;
      std::size_t leave_row = m_;
      double leave_piv = 0.0;
      auto consider = [&](std::size_t i, double t) {
        t = std::max(t, 0.0);
        const double tie = 1e-12 * (1.0 + theta);
        bool take = false;
        if (t < theta - tie) {
          take = true;
        } else if (t < theta + tie && leave_row != m_) {
          take = bland_ ? (basis_[i] < basis_[leave_row])
                        : (std::abs(tab(i, enter)) > std::abs(leave_piv));
        }
        if (take) {
          theta = std::min(theta, t);
          leave_row = i;
          leave_piv = tab(i, enter);
        }
      };
      for (std::size_t i = 0; i < m_; ++i) {
        const double coef = dir * tab(i, enter);
        if (coef > eps) {
          const double l = lo_[basis_[i]];
          if (!std::isfinite(l)) continue;
          consider(i, (xb_[i] - l) / coef);
        } else if (coef < -eps) {
          const double h = hi_[basis_[i]];
          if (!std::isfinite(h)) continue;
          consider(i, (xb_[i] - h) / coef);
        }
      }
      double theta_bound = kInf;
      if (vstat_[enter] != VStat::kFreeZero && std::isfinite(lo_[enter]) &&
          std::isfinite(hi_[enter]))
        theta_bound = hi_[enter] - lo_[enter];

      if (theta == kInf && theta_bound == kInf) {
        if (phase1_) return Step::kIterLimit;  // phase-1 cost is bounded below
        ray_col_ = enter;
        ray_dir_ = dir;
        return Step::kUnbounded;
      }

      if (theta_bound <= theta) {
        // Bound flip: no basis change.
        for (std::size_t i = 0; i < m_; ++i) {
          const double a = tab(i, enter);
          if (a != 0.0) xb_[i] -= dir * theta_bound * a;
        }
        xval_[enter] = (vstat_[enter] == VStat::kAtLower) ? hi_[enter] : lo_[enter];
        vstat_[enter] = (vstat_[enter] == VStat::kAtLower) ? VStat::kAtUpper : VStat::kAtLower;
      } else {
        if (std::abs(leave_piv) < 1e-10) {
          // Hopeless pivot; a Bland restart from scratch will take a
          // different path.
          return Step::kIterLimit;
        }
        pivot(leave_row, enter, dir, theta);
      }

      const double obj = phase_objective();
      if (obj < last_obj - 1e-12 * (1.0 + std::abs(last_obj))) {
        stall = 0;
        last_obj = obj;
      } else if (++stall > static_cast<long>(10 * m_ + 500) && !bland_) {
        bland_ = true;  // anti-cycling fallback
        stall = 0;
      }
    }
    return Step::kIterLimit;
  }

  void pivot(std::size_t row, std::size_t enter, int dir, double theta) {
    const int leaving = basis_[row];
    // Move the current point.
    for (std::size_t i = 0; i < m_; ++i) {
      const double a = tab(i, enter);
      if (a != 0.0) xb_[i] -= dir * theta * a;
    }
    const double enter_val = xval_[enter] + dir * theta;
    // The leaving variable snaps to the finite bound it landed on.
    const double landed = xb_[row];
    const double llo = lo_[leaving], lhi = hi_[leaving];
    if (llo == lhi) {
      vstat_[leaving] = VStat::kFixed;
      xval_[leaving] = llo;
    } else if (std::isfinite(llo) &&
               (!std::isfinite(lhi) || std::abs(landed - llo) <= std::abs(landed - lhi))) {
      vstat_[leaving] = VStat::kAtLower;
      xval_[leaving] = llo;
    } else if (std::isfinite(lhi)) {
      vstat_[leaving] = VStat::kAtUpper;
      xval_[leaving] = lhi;
    } else {
      vstat_[leaving] = VStat::kFreeZero;
      xval_[leaving] = 0.0;
    }

    // Gauss-Jordan elimination on the entering column.
    const double piv = tab(row, enter);
    double* prow = &tab_[row * nt_];
    const double inv = 1.0 / piv;
    for (std::size_t j = 0; j < nt_; ++j) prow[j] *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row) continue;
      const double f = tab(i, enter);
      if (f == 0.0) continue;
      double* irow = &tab_[i * nt_];
      for (std::size_t j = 0; j < nt_; ++j) irow[j] -= f * prow[j];
      irow[enter] = 0.0;
    }
    const double rf = red_[enter];
    if (rf != 0.0) {
      for (std::size_t j = 0; j < nt_; ++j) red_[j] -= rf * prow[j];
    }
    red_[enter] = 0.0;

    basis_[row] = static_cast<int>(enter);
    vstat_[enter] = VStat::kBasic;
    xb_[row] = enter_val;
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < static_cast<int>(ns_)) continue;
      std::size_t enter = nt_;
      double best = 1e-8;
      for (std::size_t j = 0; j < ns_; ++j) {
        if (vstat_[j] == VStat::kBasic || vstat_[j] == VStat::kFixed) continue;
        if (std::abs(tab(i, j)) > best) { best = std::abs(tab(i, j)); enter = j; }
      }
      if (enter == nt_) continue;  // redundant row: artificial pinned at 0
      pivot(i, enter, +1, 0.0);
    }
  }

  double cost_scale() const {
    double s = 0.0;
    for (std::size_t j = 0; j < nt_; ++j) s = std::max(s, std::abs(cost_[j]));
    return s;
  }

  LpSolution fail(LpSolution sol) const {
    sol.status = LpStatus::kNumericalFailure;
    sol.iterations = iters_;
    return sol;
  }

  // Recompute x and duals from the original data with the final basis.
  bool extract_optimum(LpSolution& sol) {
    Mat basis_mat(m_, m_);
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t k = 0; k < m_; ++k) basis_mat(i, k) = orig_col(i, basis_[k]);

    std::vector<double> rhs(m_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      double acc = brhs_[i];
      for (std::size_t j = 0; j < nt_; ++j) {
        if (vstat_[j] == VStat::kBasic) continue;
        const double v = xval_[j];
        if (v == 0.0) continue;
        const double a = orig_col(i, j);
        if (a != 0.0) acc -= a * v;
      }
      rhs[i] = acc;
    }

    std::vector<double> xbasic = xb_;
    Mat bt(m_, m_);
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t k = 0; k < m_; ++k) bt(i, k) = basis_mat(k, i);
    std::vector<double> cb(m_, 0.0);
    for (std::size_t k = 0; k < m_; ++k)
      cb[k] = (basis_[k] < static_cast<int>(n0_)) ? lp_.c[basis_[k]] : 0.0;

    std::vector<double> y(m_, 0.0);
    if (auto solved = lu_solve(basis_mat, rhs)) xbasic = *solved;
    if (auto ysolved = lu_solve(bt, cb)) y = *ysolved;
    else {
      // fall back to tableau-carried multipliers
      for (std::size_t i = 0; i < m_; ++i) {
        double acc = 0.0;
        for (std::size_t k = 0; k < m_; ++k) acc += cb[k] * tab(k, ns_ + i);
        y[i] = acc;
      }
    }

    sol.x.assign(n0_, 0.0);
    for (std::size_t j = 0; j < n0_; ++j)
      if (vstat_[j] != VStat::kBasic) sol.x[j] = xval_[j];
    double bound_violation = 0.0;
    for (std::size_t k = 0; k < m_; ++k) {
      const int j = basis_[k];
      double v = xbasic[k];
      const double l = lo_[j], h = hi_[j];
      bound_violation = std::max(bound_violation, std::max(l - v, v - h));
      v = std::min(std::max(v, std::isfinite(l) ? l : v), std::isfinite(h) ? h : v);
      if (j < static_cast<int>(n0_)) sol.x[j] = v;
    }
    if (bound_violation > 1e-7 * (1.0 + bscale_)) return false;

    double obj = 0.0;
    for (std::size_t j = 0; j < n0_; ++j) obj += lp_.c[j] * sol.x[j];
    sol.objective = obj;

    sol.dual_eq.assign(me_, 0.0);
    sol.dual_ub.assign(mu_, 0.0);
    for (std::size_t i = 0; i < me_; ++i) sol.dual_eq[i] = rowsign_[i] * y[i];
    for (std::size_t k = 0; k < mu_; ++k) {
      double v = -rowsign_[me_ + k] * y[me_ + k];
      if (v < 0.0 && v > -1e-9) v = 0.0;
      sol.dual_ub[k] = v;
    }
    return true;
  }

  void extract_farkas(LpSolution& sol) const {
    // Phase-1 duals through the artificial block.
    std::vector<double> y(m_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      double acc = 0.0;
      for (std::size_t k = 0; k < m_; ++k) {
        const double cbk = cost_[basis_[k]];
        if (cbk != 0.0) acc += cbk * tab(k, ns_ + i);
      }
      y[i] = acc;
    }
    sol.dual_eq.assign(me_, 0.0);
    sol.dual_ub.assign(mu_, 0.0);
    for (std::size_t i = 0; i < me_; ++i) sol.dual_eq[i] = -rowsign_[i] * y[i];
    for (std::size_t k = 0; k < mu_; ++k)
      sol.dual_ub[k] = std::max(0.0, -rowsign_[me_ + k] * y[me_ + k]);
  }

  void extract_ray(LpSolution& sol) const {
    sol.ray.assign(n0_, 0.0);
    if (ray_col_ < n0_) sol.ray[ray_col_] = ray_dir_;
    for (std::size_t i = 0; i < m_; ++i) {
      const int j = basis_[i];
      if (j < static_cast<int>(n0_)) sol.ray[j] = -ray_dir_ * tab(i, ray_col_);
    }
    sol.x.assign(n0_, 0.0);
    for (std::size_t j = 0; j < n0_; ++j)
      sol.x[j] = (vstat_[j] == VStat::kBasic) ? 0.0 : xval_[j];
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < static_cast<int>(n0_)) sol.x[basis_[i]] = xb_[i];
  }
};

inline void validate(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars();
  if (lp.lo.size() != n || lp.hi.size() != n)
    throw StructuralError("LinearProgram: bounds length mismatch");
  if (lp.a_eq.cols() != n && lp.a_eq.rows() > 0)
    throw StructuralError("LinearProgram: a_eq column mismatch");
  if (lp.a_ub.cols() != n && lp.a_ub.rows() > 0)
    throw StructuralError("LinearProgram: a_ub column mismatch");
  if (lp.b_eq.size() != lp.a_eq.rows() || lp.b_ub.size() != lp.a_ub.rows())
    throw StructuralError("LinearProgram: rhs length mismatch");
  for (double v : lp.c)
    if (!std::isfinite(v)) throw StructuralError("LinearProgram: non-finite objective");
  for (double v : lp.b_eq)
    if (!std::isfinite(v)) throw StructuralError("LinearProgram: non-finite rhs");
  for (double v : lp.b_ub)
    if (!std::isfinite(v)) throw StructuralError("LinearProgram: non-finite rhs");
  for (double v : lp.a_eq.data())
    if (!std::isfinite(v)) throw StructuralError("LinearProgram: non-finite coefficient");
  for (double v : lp.a_ub.data())
    if (!std::isfinite(v)) throw StructuralError("LinearProgram: non-finite coefficient");
  for (std::size_t j = 0; j < n; ++j) {
    if (std::isnan(lp.lo[j]) || std::isnan(lp.hi[j]))
      throw StructuralError("LinearProgram: NaN bound");
    if (lp.lo[j] > lp.hi[j]) throw StructuralError("LinearProgram: lo > hi");
  }
}

}  // namespace lpdetail

inline LpSolution lp_solve(const LinearProgram& lp) {
  lpdetail::validate(lp);
  LpSolution sol;
  for (int attempt = 0; attempt < 2; ++attempt) {
    lpdetail::BoundedSimplex simplex(lp, /*bland=*/attempt == 1);
    sol = simplex.run();
    if (sol.status != LpStatus::kNumericalFailure) return sol;
  }
  return sol;  // explicit failure, never a silent wrong answer
}

}  // namespace cohdeals
