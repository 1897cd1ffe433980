#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oils/interval_linalg.hpp"
#include "oils/outcome.hpp"
#include "oils/simplex.hpp"

namespace oils {

enum class MembershipMode {
  Inclusive,  // |Ac x - bc| rounded down, right side up: true solutions never rejected
  Strict,     // the opposite rounding: accepted points genuinely satisfy the condition
};

// Oettli-Prager test  |Ac x - bc| <= Ad |x| + bd  for a point x; the system
// is taken in its midpoint/radius closure.
inline bool op_membership(const IntervalMatrix& a, const IntervalVector& b, const PointVector& x,
                          MembershipMode mode = MembershipMode::Inclusive) {
  require_shape(a.rows() == b.size() && a.cols() == x.size(), "op_membership: shape mismatch");
  const PointMatrix ac = mid(a);
  const PointMatrix ad = rad(a);
  const std::size_t m = a.rows(), n = a.cols();
  for (std::size_t i = 0; i < m; ++i) {
    Interval lhs(0.0);
    for (std::size_t j = 0; j < n; ++j)
      lhs = lhs + Interval(rnd::mul_down(ac(i, j), x[j]), rnd::mul_up(ac(i, j), x[j]));
    lhs = lhs - Interval(b[i].mid());
    double rhs_up = b[i].rad(), rhs_down = b[i].rad();
    for (std::size_t j = 0; j < n; ++j) {
      const double ax = std::fabs(x[j]);
      rhs_up = rnd::add_up(rhs_up, rnd::mul_up(ad(i, j), ax));
      rhs_down = rnd::add_down(rhs_down, rnd::mul_down(ad(i, j), ax));
    }
    const bool row_ok =
        mode == MembershipMode::Inclusive ? lhs.mig() <= rhs_up : lhs.mag() <= rhs_down;
    if (!row_ok) return false;
  }
  return true;
}

// Linearization of the Oettli-Prager condition in the closed orthant z:
//   ( Ac - Ad Dz) x <= bc + bd
//   (-Ac - Ad Dz) x <= bd - bc
//   -Dz x <= 0
// with the objective min or max x_coord. 2m + n rows over the free x.
struct OrthantLP {
  SignVector z;
  PointMatrix rows;
  PointVector rhs;
  std::size_t objective_coordinate = 0;
  bool maximize = false;
};

inline OrthantLP build_orthant_lp(const IntervalMatrix& a, const IntervalVector& b,
                                  const SignVector& z, std::size_t coordinate, bool maximize) {
  require_shape(z.size() == a.cols(), "build_orthant_lp: sign vector size mismatch");
  const PointMatrix ac = mid(a);
  const PointMatrix ad = rad(a);
  const std::size_t m = a.rows(), n = a.cols();
  OrthantLP lp;
  lp.z = z;
  lp.rows = PointMatrix(2 * m + n, n, 0.0);
  lp.rhs.assign(2 * m + n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      lp.rows(i, j) = ac(i, j) - ad(i, j) * z[j];
      lp.rows(m + i, j) = -ac(i, j) - ad(i, j) * z[j];
    }
    lp.rhs[i] = b[i].mid() + b[i].rad();
    lp.rhs[m + i] = b[i].rad() - b[i].mid();
  }
  for (std::size_t j = 0; j < n; ++j) lp.rows(2 * m + j, j) = -static_cast<double>(z[j]);
  lp.objective_coordinate = coordinate;
  lp.maximize = maximize;
  return lp;
}

// The sign rows make y = Dz x nonnegative, so the LP is solved over y with
// the substitution x = Dz y; results are mapped back to x space.
inline LpResult<double> solve_orthant_lp(const OrthantLP& lp,
                                         std::size_t pivot_limit = 100000) {
  const std::size_t n = lp.rows.cols();
  const std::size_t m2 = lp.rows.rows() - n;  // the 2m inequality rows
  LinearProgram<double> std_form;
  std_form.num_vars = n;
  std_form.rows.assign(m2, std::vector<double>(n, 0.0));
  std_form.rhs.assign(m2, 0.0);
  for (std::size_t i = 0; i < m2; ++i) {
    for (std::size_t j = 0; j < n; ++j) std_form.rows[i][j] = lp.rows(i, j) * lp.z[j];
    std_form.rhs[i] = lp.rhs[i];
  }
  std_form.objective.assign(n, 0.0);
  const double sign = lp.maximize ? -1.0 : 1.0;
  std_form.objective[lp.objective_coordinate] =
      sign * static_cast<double>(lp.z[lp.objective_coordinate]);
  LpResult<double> r = simplex_solve(std_form, pivot_limit);
  if (r.status != LpStatus::Optimal) return r;
  for (std::size_t j = 0; j < n; ++j) r.point[j] *= static_cast<double>(lp.z[j]);
  r.value = r.point[lp.objective_coordinate];
  return r;
}

struct HullOptions {
  std::optional<IntervalVector> presolve;  // enclosure used to prune orthants
  std::size_t orthant_budget = std::size_t{1} << 20;
  std::size_t variable_cap = 20;  // refuse full enumeration beyond 2^20 orthants
  std::size_t pivot_limit = 100000;
};

// Exact-to-tolerance interval hull by orthant enumeration: per feasible
// orthant and coordinate, minimize and maximize x_i; hull is the min/max over
// orthants. All orthants infeasible certifies unsolvability; any unbounded
// coordinate LP reports an unbounded solution set.
inline SolveOutcome hull(const IntervalMatrix& a, const IntervalVector& b,
                         const HullOptions& options = {}) {
  require_shape(a.rows() >= a.cols() && a.cols() >= 1, "hull: needs m >= n >= 1");
  const std::size_t n = a.cols();

  // candidate signs per coordinate, pruned by the presolve enclosure
  std::vector<std::vector<int>> signs(n, {+1, -1});
  if (options.presolve) {
    require_shape(options.presolve->size() == n, "hull: presolve size mismatch");
    for (std::size_t j = 0; j < n; ++j) {
      const Interval& p = (*options.presolve)[j];
      signs[j].clear();
      if (p.hi() >= 0.0) signs[j].push_back(+1);
      if (p.lo() <= 0.0) signs[j].push_back(-1);
    }
  } else if (n > options.variable_cap) {
    return SolveOutcome::failure(FailureReason::OrthantBudgetExceeded);
  }
  double orthant_count = 1.0;
  for (const auto& s : signs) orthant_count *= static_cast<double>(s.size());
  if (orthant_count > static_cast<double>(options.orthant_budget))
    return SolveOutcome::failure(FailureReason::OrthantBudgetExceeded);

  PointVector best_lo(n, rnd::kInf), best_hi(n, -rnd::kInf);
  bool any_feasible = false;

  std::vector<std::size_t> pick(n, 0);
  for (;;) {
    std::vector<int> zv(n);
    for (std::size_t j = 0; j < n; ++j) zv[j] = signs[j][pick[j]];
    const SignVector z{std::move(zv)};

    bool orthant_feasible = true;
    for (std::size_t coord = 0; coord < n && orthant_feasible; ++coord) {
      for (const bool maximize : {false, true}) {
        const OrthantLP lp = build_orthant_lp(a, b, z, coord, maximize);
        const LpResult<double> r = solve_orthant_lp(lp, options.pivot_limit);
        if (r.status == LpStatus::Infeasible) {
          orthant_feasible = false;
          break;
        }
        if (r.status == LpStatus::Unbounded) return SolveOutcome::unbounded();
        if (r.status == LpStatus::IterationLimit)
          return SolveOutcome::failure(FailureReason::IterationLimit);
        if (maximize)
          best_hi[coord] = std::max(best_hi[coord], r.value);
        else
          best_lo[coord] = std::min(best_lo[coord], r.value);
      }
    }
    any_feasible |= orthant_feasible;

    std::size_t j = 0;
    for (; j < n; ++j) {
      if (++pick[j] < signs[j].size()) break;
      pick[j] = 0;
    }
    if (j == n) break;
  }

  if (!any_feasible) return SolveOutcome::unsolvable();
  IntervalVector box(n, Interval(0.0));
  for (std::size_t j = 0; j < n; ++j)
    box[j] = Interval(std::min(best_lo[j], best_hi[j]), std::max(best_lo[j], best_hi[j]));
  return SolveOutcome::enclosure(std::move(box));
}

}  // namespace oils
