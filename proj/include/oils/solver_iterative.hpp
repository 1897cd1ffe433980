#pragma once

#include <optional>

#include "oils/outcome.hpp"
#include "oils/preconditioner.hpp"
#include "oils/solver_rohn.hpp"

namespace oils {

struct IterationConfig {
  double epsilon = 1e-8;          // stopping parameter
  std::size_t max_iterations = 20;  // safety cap when epsilon never triggers
};

enum class IterativeVariant { Jacobi, GaussSeidel };

// One Jacobi sweep X*_i = (rhs_i - sum_{j != i} M_ij X_j) / M_ii without the
// intersection step (the caller intersects). nullopt when a diagonal entry
// contains zero.
inline std::optional<IntervalVector> jacobi_step(const IntervalMatrix& m,
                                                 const IntervalVector& rhs,
                                                 const IntervalVector& x) {
  require_shape(m.rows() == m.cols() && m.rows() == rhs.size() && rhs.size() == x.size(),
                "jacobi_step: shape mismatch");
  const std::size_t n = x.size();
  IntervalVector out(n, Interval(0.0));
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i).contains(0.0)) return std::nullopt;
    Interval acc = rhs[i];
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) acc = acc - m(i, j) * x[j];
    out[i] = *divide(acc, m(i, i));
  }
  return out;
}

// max componentwise Hausdorff distance: max(|lo - lo'|, |hi - hi'|)
inline double box_distance(const IntervalVector& a, const IntervalVector& b) {
  double dist = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dist = std::max(dist, std::fabs(a[i].lo() - b[i].lo()));
    dist = std::max(dist, std::fabs(a[i].hi() - b[i].hi()));
  }
  return dist;
}

// Jacobi / Gauss-Seidel on the square top block of the Hansen-preconditioned
// system, contracting a starting box. Without an explicit start the basic
// Rohn enclosure is used; if that fails the method reports no initial
// enclosure rather than guessing a box. Empty intersections are reported as
// failures, never as unsolvability: the truncated top block has already
// dropped m-n equations.
inline SolveOutcome solve_iterative(const IntervalMatrix& a, const IntervalVector& b,
                                    IterativeVariant variant, const IterationConfig& cfg,
                                    std::optional<IntervalVector> x0 = std::nullopt) {
  require_shape(a.rows() == b.size(), "solve_iterative: shape mismatch");
  auto pre = precondition(a, b);
  if (!pre) return SolveOutcome::failure(FailureReason::SingularMatrix);
  const IntervalMatrix top = pre->top_matrix();
  const IntervalVector rhs = pre->top_rhs();
  const std::size_t n = top.rows();

  for (std::size_t i = 0; i < n; ++i)
    if (top(i, i).contains(0.0)) return SolveOutcome::failure(FailureReason::ZeroOnDiagonal);

  IntervalVector x;
  if (x0) {
    require_shape(x0->size() == n, "solve_iterative: x0 size mismatch");
    x = std::move(*x0);
  } else {
    RohnResult base = rohn_basic(a, b);
    if (!base.outcome.is_enclosure())
      return SolveOutcome::failure(FailureReason::NoInitialEnclosure);
    x = std::move(base.outcome.box);
  }

  std::size_t steps = 0;
  bool converged = false;
  for (; steps < cfg.max_iterations; ++steps) {
    const IntervalVector prev = x;
    if (variant == IterativeVariant::Jacobi) {
      auto star = jacobi_step(top, rhs, x);
      if (!star) return SolveOutcome::failure(FailureReason::ZeroOnDiagonal);
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = intersect(x[i], (*star)[i]);
        if (x[i].is_empty()) return SolveOutcome::failure(FailureReason::EmptyIntersection);
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {  // new components feed later rows
        Interval acc = rhs[i];
        for (std::size_t j = 0; j < n; ++j)
          if (j != i) acc = acc - top(i, j) * x[j];
        x[i] = intersect(x[i], *divide(acc, top(i, i)));
        if (x[i].is_empty()) return SolveOutcome::failure(FailureReason::EmptyIntersection);
      }
    }
    if (box_distance(prev, x) < cfg.epsilon) {
      ++steps;
      converged = true;
      break;
    }
  }
  SolveOutcome out = SolveOutcome::enclosure(std::move(x));
  out.stats.iterations = steps;
  out.stats.converged = converged;
  return out;
}

}  // namespace oils
