// Shared LP test utilities: random bounded-feasible instances and a full
// KKT verifier used by both the unit tests and the acceptance suite.
#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "cohdeals/linprog.hpp"

namespace lpcheck {

struct KktReport {
  double primal_infeas = 0.0;   // worst constraint/bound violation
  double dual_infeas = 0.0;     // worst reduced-cost sign violation
  double comp_slack = 0.0;      // worst complementary slackness product
  double duality_gap = 0.0;     // |primal obj - dual obj|
  bool ok(double feas, double gap) const {
    return primal_infeas <= feas && dual_infeas <= feas && comp_slack <= gap &&
           duality_gap <= gap;
  }
};

inline KktReport verify_kkt(const cohdeals::LinearProgram& lp,
                            const cohdeals::LpSolution& sol) {
  using cohdeals::kInf;
  KktReport rep;
  const std::size_t n = lp.num_vars();
  const std::size_t me = lp.a_eq.rows(), mu = lp.a_ub.rows();

  for (std::size_t j = 0; j < n; ++j) {
    rep.primal_infeas = std::max(rep.primal_infeas, lp.lo[j] - sol.x[j]);
    rep.primal_infeas = std::max(rep.primal_infeas, sol.x[j] - lp.hi[j]);
  }
  std::vector<double> slack(mu, 0.0);
  for (std::size_t i = 0; i < me; ++i) {
    double ax = 0.0;
    for (std::size_t j = 0; j < n; ++j) ax += lp.a_eq(i, j) * sol.x[j];
    rep.primal_infeas = std::max(rep.primal_infeas, std::abs(ax - lp.b_eq[i]));
  }
  for (std::size_t k = 0; k < mu; ++k) {
    double ax = 0.0;
    for (std::size_t j = 0; j < n; ++j) ax += lp.a_ub(k, j) * sol.x[j];
    slack[k] = lp.b_ub[k] - ax;
    rep.primal_infeas = std::max(rep.primal_infeas, -slack[k]);
    rep.dual_infeas = std::max(rep.dual_infeas, -sol.dual_ub[k]);
    rep.comp_slack = std::max(rep.comp_slack, std::abs(sol.dual_ub[k] * slack[k]));
  }

  // r_j = c_j - dual_eq . A_eq[:,j] + dual_ub . A_ub[:,j]
  double dual_obj = 0.0;
  for (std::size_t i = 0; i < me; ++i) dual_obj += sol.dual_eq[i] * lp.b_eq[i];
  for (std::size_t k = 0; k < mu; ++k) dual_obj -= sol.dual_ub[k] * lp.b_ub[k];
  for (std::size_t j = 0; j < n; ++j) {
    double r = lp.c[j];
    for (std::size_t i = 0; i < me; ++i) r -= sol.dual_eq[i] * lp.a_eq(i, j);
    for (std::size_t k = 0; k < mu; ++k) r += sol.dual_ub[k] * lp.a_ub(k, j);
    const double at_lo = sol.x[j] - lp.lo[j];
    const double at_hi = lp.hi[j] - sol.x[j];
    if (r > 0) {
      // positive reduced cost requires the variable at its lower bound
      rep.comp_slack = std::max(rep.comp_slack, r * (std::isfinite(at_lo) ? at_lo : kInf));
      dual_obj += r * lp.lo[j];
      if (!std::isfinite(lp.lo[j])) rep.dual_infeas = std::max(rep.dual_infeas, r);
    } else if (r < 0) {
      rep.comp_slack = std::max(rep.comp_slack, -r * (std::isfinite(at_hi) ? at_hi : kInf));
      dual_obj += r * lp.hi[j];
      if (!std::isfinite(lp.hi[j])) rep.dual_infeas = std::max(rep.dual_infeas, -r);
    }
  }
  rep.duality_gap = std::abs(sol.objective - dual_obj);
  return rep;
}

/// Random LP with a finite box and a constructed interior feasible point, so
/// the instance is guaranteed feasible and bounded.
inline cohdeals::LinearProgram random_bounded_lp(std::mt19937& rng) {
  using cohdeals::LinearProgram;
  std::uniform_int_distribution<int> nd(1, 30);
  const int n = nd(rng);
  std::uniform_int_distribution<int> med(0, std::max(1, n / 2));
  std::uniform_int_distribution<int> mud(0, n);
  const int me = med(rng), mu = mud(rng);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  std::uniform_real_distribution<double> width(0.1, 4.0);
  std::uniform_real_distribution<double> pos(0.0, 1.0);

  LinearProgram lp = LinearProgram::with_vars(n);
  std::vector<double> feasible(n);
  for (int j = 0; j < n; ++j) {
    const double center = coef(rng);
    const double w = width(rng);
    lp.lo[j] = center - w;
    lp.hi[j] = center + w;
    feasible[j] = center + 0.8 * w * (2.0 * pos(rng) - 1.0);
    lp.c[j] = coef(rng);
  }
  lp.a_eq = cohdeals::Mat(me, n);
  lp.b_eq.assign(me, 0.0);
  for (int i = 0; i < me; ++i) {
    double b = 0.0;
    for (int j = 0; j < n; ++j) {
      const double a = coef(rng);
      lp.a_eq(i, j) = a;
      b += a * feasible[j];
    }
    lp.b_eq[i] = b;
  }
  lp.a_ub = cohdeals::Mat(mu, n);
  lp.b_ub.assign(mu, 0.0);
  for (int k = 0; k < mu; ++k) {
    double ax = 0.0;
    for (int j = 0; j < n; ++j) {
      const double a = coef(rng);
      lp.a_ub(k, j) = a;
      ax += a * feasible[j];
    }
    lp.b_ub[k] = ax + 2.0 * pos(rng);  // keep strictly feasible at the witness
  }
  return lp;
}

}  // namespace lpcheck
