#pragma once

#include <optional>

#include "oils/outcome.hpp"
#include "oils/preconditioner.hpp"

namespace oils {

// Row echelon shape (C d e; 0 f g): C is (n-1)x(n-1) with exact [1,1] pivots
// and exact [0,0] below them, d/e are the eliminated rows' last-column and
// right-hand-side entries, and f/g are the m-n+1 tail equations f_i x_n = g_i.
struct EchelonForm {
  IntervalMatrix C;
  IntervalVector d, e, f, g;
};

enum class PivotRule {
  Mignitude,   // row with the largest mignitude pivot candidate
  FirstValid,  // first row whose candidate avoids zero (for order-stable tests)
};

// Column-by-column elimination. Pivot and sub-pivot entries are assigned
// [1,1] / [0,0] rather than computed: the eliminating operation yields those
// values in every instance of the system, so interval evaluation would only
// overestimate them. nullopt when some column has no zero-free pivot.
inline std::optional<EchelonForm> eliminate(const IntervalMatrix& a, const IntervalVector& b,
                                            PivotRule rule = PivotRule::Mignitude) {
  require_shape(a.rows() == b.size(), "eliminate: shape mismatch");
  require_shape(a.rows() >= a.cols() && a.cols() >= 1, "eliminate: needs m >= n >= 1");
  const std::size_t m = a.rows(), n = a.cols();

  IntervalMatrix w(m, n + 1, Interval(0.0));  // working tableau [A | b]
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) w(i, j) = a(i, j);
    w(i, n) = b[i];
  }

  for (std::size_t col = 0; col + 1 < n; ++col) {
    std::size_t pivot_row = m;
    double best = -1.0;
    for (std::size_t i = col; i < m; ++i) {
      const double mg = w(i, col).mig();
      if (mg > 0.0 && (rule == PivotRule::FirstValid ? pivot_row == m : mg > best)) {
        pivot_row = i;
        best = mg;
      }
    }
    if (pivot_row == m) return std::nullopt;
    if (pivot_row != col)
      for (std::size_t j = col; j <= n; ++j) std::swap(w(col, j), w(pivot_row, j));

    const Interval pivot = w(col, col);
    for (std::size_t j = col + 1; j <= n; ++j) w(col, j) = *divide(w(col, j), pivot);
    w(col, col) = Interval(1.0);

    for (std::size_t i = col + 1; i < m; ++i) {
      const Interval factor = w(i, col);
      w(i, col) = Interval(0.0);
      if (factor == Interval(0.0)) continue;
      for (std::size_t j = col + 1; j <= n; ++j) w(i, j) = w(i, j) - factor * w(col, j);
    }
  }

  EchelonForm ef;
  ef.C = IntervalMatrix(n - 1, n - 1, Interval(0.0));
  ef.d.resize(n - 1, Interval(0.0));
  ef.e.resize(n - 1, Interval(0.0));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) ef.C(i, j) = w(i, j);
    ef.d[i] = w(i, n - 1);
    ef.e[i] = w(i, n);
  }
  const std::size_t tail = m - n + 1;
  ef.f.resize(tail, Interval(0.0));
  ef.g.resize(tail, Interval(0.0));
  for (std::size_t i = 0; i < tail; ++i) {
    ef.f[i] = w(n - 1 + i, n - 1);
    ef.g[i] = w(n - 1 + i, n);
  }
  return ef;
}

struct TailSolveResult {
  enum class Kind { Value, Unsolvable, Unbounded } kind;
  Interval x;  // valid for Kind::Value
};

// x_n as the intersection of all g_i / f_i. Zero-containing coefficients go
// through extended division; a two-ray result hulls to the whole line and
// constrains nothing.
inline TailSolveResult tail_solve(const IntervalVector& f, const IntervalVector& g) {
  require_shape(f.size() == g.size() && !f.empty(), "tail_solve: shape mismatch");
  Interval acc = Interval::whole_line();
  for (std::size_t i = 0; i < f.size(); ++i) {
    const ExtendedDivision q = extended_divide(g[i], f[i]);
    Interval quotient = Interval::empty();
    for (int p = 0; p < q.count; ++p) quotient = hull(quotient, q.part[p]);
    acc = intersect(acc, quotient);
    if (acc.is_empty()) return {TailSolveResult::Kind::Unsolvable, Interval(0.0)};
  }
  if (!acc.is_bounded()) return {TailSolveResult::Kind::Unbounded, Interval(0.0)};
  return {TailSolveResult::Kind::Value, acc};
}

// x_i = e_i - d_i x_n - sum_{j>i} C_ij x_j; unit pivots leave no division.
inline IntervalVector back_substitute(const EchelonForm& ef, const Interval& x_n) {
  const std::size_t n = ef.d.size() + 1;
  IntervalVector x(n, Interval(0.0));
  x[n - 1] = x_n;
  for (std::size_t ii = n - 1; ii-- > 0;) {
    Interval acc = ef.e[ii] - ef.d[ii] * x_n;
    for (std::size_t j = ii + 1; j + 1 < n; ++j) acc = acc - ef.C(ii, j) * x[j];
    x[ii] = acc;
  }
  return x;
}

// Full pipeline. Without preconditioning an empty tail intersection is a
// proof of unsolvability; preconditioning only enlarges the solution set, so
// an Unsolvable verdict stays valid there as well.
inline SolveOutcome solve_ge(const IntervalMatrix& a, const IntervalVector& b,
                             bool use_preconditioner, PivotRule rule = PivotRule::Mignitude) {
  const IntervalMatrix* sys_a = &a;
  const IntervalVector* sys_b = &b;
  std::optional<PreconditionedSystem> pre;
  if (use_preconditioner) {
    pre = precondition(a, b);
    if (!pre) return SolveOutcome::failure(FailureReason::SingularMatrix);
    sys_a = &pre->full_matrix;
    sys_b = &pre->full_rhs;
  }
  auto ef = eliminate(*sys_a, *sys_b, rule);
  if (!ef) return SolveOutcome::failure(FailureReason::PivotBreakdown);
  const TailSolveResult tail = tail_solve(ef->f, ef->g);
  switch (tail.kind) {
    case TailSolveResult::Kind::Unsolvable: return SolveOutcome::unsolvable();
    case TailSolveResult::Kind::Unbounded: return SolveOutcome::unbounded();
    case TailSolveResult::Kind::Value: break;
  }
  return SolveOutcome::enclosure(back_substitute(*ef, tail.x));
}

}  // namespace oils
