#pragma once

#include <optional>

#include "oils/interval_linalg.hpp"
#include "oils/point_linalg.hpp"

namespace oils {

// System multiplied through by Hansen's block preconditioner. The top n rows
// wrap the identity, the remaining m-n rows hold small intervals around zero;
// stacking top over residual reproduces `full` exactly.
struct PreconditionedSystem {
  IntervalMatrix full_matrix;
  IntervalVector full_rhs;
  std::size_t top_rows = 0;
  PointMatrix preconditioner;

  IntervalMatrix top_matrix() const {
    IntervalMatrix out(top_rows, full_matrix.cols(), Interval(0.0));
    for (std::size_t i = 0; i < top_rows; ++i)
      for (std::size_t j = 0; j < full_matrix.cols(); ++j) out(i, j) = full_matrix(i, j);
    return out;
  }
  IntervalVector top_rhs() const {
    return IntervalVector(full_rhs.begin(), full_rhs.begin() + static_cast<long>(top_rows));
  }
  IntervalMatrix residual_matrix() const {
    const std::size_t res = full_matrix.rows() - top_rows;
    IntervalMatrix out(res, full_matrix.cols(), Interval(0.0));
    for (std::size_t i = 0; i < res; ++i)
      for (std::size_t j = 0; j < full_matrix.cols(); ++j)
        out(i, j) = full_matrix(top_rows + i, j);
    return out;
  }
  IntervalVector residual_rhs() const {
    return IntervalVector(full_rhs.begin() + static_cast<long>(top_rows), full_rhs.end());
  }
};

// C = [[A1c, 0], [A2c, I]]^-1 where A1c is the first n rows of mid(A) and A2c
// the remaining m-n rows. nullopt when the block matrix is numerically
// singular; no row permutation is attempted in that case.
inline std::optional<PointMatrix> hansen_preconditioner(const IntervalMatrix& a) {
  require_shape(a.rows() >= a.cols(), "hansen_preconditioner: needs m >= n");
  const std::size_t m = a.rows(), n = a.cols();
  const PointMatrix ac = mid(a);
  PointMatrix block(m, m, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) block(i, j) = ac(i, j);
  for (std::size_t i = n; i < m; ++i) block(i, i) = 1.0;
  return approx_inverse(block);
}

// (C*A, C*b) in outward-rounded arithmetic with C applied as a point matrix.
inline std::optional<PreconditionedSystem> precondition(const IntervalMatrix& a,
                                                        const IntervalVector& b) {
  require_shape(a.rows() == b.size(), "precondition: shape mismatch");
  auto c = hansen_preconditioner(a);
  if (!c) return std::nullopt;
  PreconditionedSystem out;
  out.full_matrix = mul(*c, a);
  out.full_rhs = mul(*c, b);
  out.top_rows = a.cols();
  out.preconditioner = std::move(*c);
  return out;
}

}  // namespace oils
