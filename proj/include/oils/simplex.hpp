#pragma once

#include <cstddef>
#include <vector>

#include "oils/mat.hpp"

namespace oils {

// Dense two-phase primal simplex with Bland's anti-cycling rule, templated on
// the scalar so the same code runs in double (tolerance 1e-9) and in exact
// rational arithmetic (tolerance 0) for the certification re-checks.

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

template <class T>
struct LinearProgram {  // min c.y  subject to  G y <= h, y >= 0
  std::size_t num_vars = 0;
  std::vector<std::vector<T>> rows;  // G, one vector per constraint
  std::vector<T> rhs;                // h
  std::vector<T> objective;          // c
};

template <class T>
struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  T value{};
  std::vector<T> point;
};

template <class T>
struct SimplexTolerance {
  static T value() { return T(0); }
};
template <>
struct SimplexTolerance<double> {
  static double value() { return 1e-9; }
};

template <class T>
LpResult<T> simplex_solve(const LinearProgram<T>& lp, std::size_t pivot_limit = 100000) {
  const T tol = SimplexTolerance<T>::value();
  const std::size_t nv = lp.num_vars;
  std::size_t rows = lp.rows.size();

  // columns: structural | slack (one per row) | artificial (flipped rows) | rhs
  const std::size_t slack_begin = nv;
  const std::size_t art_begin = nv + rows;
  std::size_t n_art = 0;
  for (const T& h : lp.rhs)
    if (h < T(0)) ++n_art;
  const std::size_t width = art_begin + n_art + 1;
  const std::size_t rhs_col = width - 1;

  std::vector<std::vector<T>> t(rows, std::vector<T>(width, T(0)));
  std::vector<std::size_t> basis(rows);
  {
    std::size_t art = art_begin;
    for (std::size_t i = 0; i < rows; ++i) {
      const bool flip = lp.rhs[i] < T(0);
      for (std::size_t j = 0; j < nv; ++j) t[i][j] = flip ? -lp.rows[i][j] : lp.rows[i][j];
      t[i][slack_begin + i] = flip ? T(-1) : T(1);
      t[i][rhs_col] = flip ? -lp.rhs[i] : lp.rhs[i];
      if (flip) {
        t[i][art] = T(1);
        basis[i] = art++;
      } else {
        basis[i] = slack_begin + i;
      }
    }
  }

  std::size_t pivots = 0;
  std::vector<T> red(width, T(0));  // reduced-cost row, rhs slot carries -objective

  const auto pivot_at = [&](std::size_t pr, std::size_t pc) {
    const T p = t[pr][pc];
    for (T& v : t[pr]) v /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pr) continue;
      const T factor = t[i][pc];
      if (factor == T(0)) continue;
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= factor * t[pr][j];
    }
    const T rfactor = red[pc];
    if (rfactor != T(0))
      for (std::size_t j = 0; j < width; ++j) red[j] -= rfactor * t[pr][j];
    basis[pr] = pc;
  };

  // Bland: entering = lowest-index improving column, leaving = min ratio with
  // lowest basis index on ties.
  const auto iterate = [&](std::size_t col_limit) -> LpStatus {
    for (;;) {
      std::size_t enter = width;
      for (std::size_t j = 0; j < col_limit; ++j)
        if (red[j] < -tol) {
          enter = j;
          break;
        }
      if (enter == width) return LpStatus::Optimal;
      std::size_t leave = rows;
      for (std::size_t i = 0; i < rows; ++i) {
        if (!(t[i][enter] > tol)) continue;
        if (leave == rows) {
          leave = i;
          continue;
        }
        const T lhs = t[i][rhs_col] * t[leave][enter];
        const T rhs_v = t[leave][rhs_col] * t[i][enter];
        if (lhs < rhs_v || (lhs == rhs_v && basis[i] < basis[leave])) leave = i;
      }
      if (leave == rows) return LpStatus::Unbounded;
      if (++pivots > pivot_limit) return LpStatus::IterationLimit;
      pivot_at(leave, enter);
    }
  };

  const auto load_costs = [&](const std::vector<T>& cost) {
    std::fill(red.begin(), red.end(), T(0));
    for (std::size_t j = 0; j < cost.size(); ++j) red[j] = cost[j];
    for (std::size_t i = 0; i < rows; ++i) {
      const T cb = basis[i] < cost.size() ? cost[basis[i]] : T(0);
      if (cb == T(0)) continue;
      for (std::size_t j = 0; j < width; ++j) red[j] -= cb * t[i][j];
    }
  };

  LpResult<T> result;
  if (n_art > 0) {  // phase 1: minimize the artificial sum
    std::vector<T> cost(art_begin + n_art, T(0));
    for (std::size_t j = art_begin; j < art_begin + n_art; ++j) cost[j] = T(1);
    load_costs(cost);
    const LpStatus st = iterate(art_begin + n_art);
    if (st == LpStatus::IterationLimit) {
      result.status = st;
      return result;
    }
    if (-red[rhs_col] > tol) {  // positive artificial sum left over
      result.status = LpStatus::Infeasible;
      return result;
    }
    // remove artificials from the basis; rows they cannot leave are redundant
    for (std::size_t i = rows; i-- > 0;) {
      if (basis[i] < art_begin) continue;
      std::size_t pc = art_begin;
      for (std::size_t j = 0; j < art_begin; ++j)
        if (t[i][j] > tol || t[i][j] < -tol) {
          pc = j;
          break;
        }
      if (pc < art_begin) {
        pivot_at(i, pc);
      } else {
        t.erase(t.begin() + static_cast<long>(i));
        basis.erase(basis.begin() + static_cast<long>(i));
        --rows;
      }
    }
  }

  std::vector<T> cost(art_begin, T(0));
  for (std::size_t j = 0; j < nv; ++j) cost[j] = lp.objective[j];
  load_costs(cost);
  const LpStatus st = iterate(art_begin);  // artificial columns stay banned
  result.status = st;
  if (st != LpStatus::Optimal) return result;
  result.point.assign(nv, T(0));
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] < nv) result.point[basis[i]] = t[i][rhs_col];
  result.value = T(0);
  for (std::size_t j = 0; j < nv; ++j) result.value += lp.objective[j] * result.point[j];
  return result;
}

}  // namespace oils
