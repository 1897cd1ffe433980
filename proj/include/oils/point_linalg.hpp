#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "oils/mat.hpp"

namespace oils {

inline PointMatrix transpose(const PointMatrix& a) {
  PointMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

inline PointMatrix abs(const PointMatrix& a) {
  PointMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data().size(); ++i) out.data()[i] = std::fabs(a.data()[i]);
  return out;
}

inline PointVector abs(const PointVector& v) {
  PointVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::fabs(v[i]);
  return out;
}

inline double norm_inf(const PointMatrix& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += std::fabs(a(i, j));
    best = std::max(best, s);
  }
  return best;
}

inline double norm_inf(const PointVector& v) {
  double best = 0.0;
  for (double x : v) best = std::max(best, std::fabs(x));
  return best;
}

inline PointMatrix matmul(const PointMatrix& a, const PointMatrix& b) {
  require_shape(a.cols() == b.rows(), "matmul: shape mismatch");
  PointMatrix out(a.rows(), b.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

inline PointVector matvec(const PointMatrix& a, const PointVector& v) {
  require_shape(a.cols() == v.size(), "matvec: shape mismatch");
  PointVector out(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

// LU with partial pivoting. A pivot below 1e-12 * ||M||_inf reports the
// matrix as (numerically) singular.
struct LuDecomposition {
  PointMatrix lu;
  std::vector<std::size_t> perm;
};

inline std::optional<LuDecomposition> lu_factor(const PointMatrix& m) {
  require_shape(m.rows() == m.cols(), "lu_factor: matrix must be square");
  const std::size_t n = m.rows();
  LuDecomposition f{m, std::vector<std::size_t>(n)};
  std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
  const double tol = 1e-12 * norm_inf(m);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::fabs(f.lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double cand = std::fabs(f.lu(i, k));
      if (cand > best) {
        best = cand;
        piv = i;
      }
    }
    if (!(best > tol)) return std::nullopt;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(f.lu(k, j), f.lu(piv, j));
      std::swap(f.perm[k], f.perm[piv]);
    }
    const double pivot = f.lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double factor = f.lu(i, k) / pivot;
      f.lu(i, k) = factor;
      for (std::size_t j = k + 1; j < n; ++j) f.lu(i, j) -= factor * f.lu(k, j);
    }
  }
  return f;
}

inline PointVector lu_solve(const LuDecomposition& f, const PointVector& b) {
  const std::size_t n = f.lu.rows();
  require_shape(b.size() == n, "lu_solve: shape mismatch");
  PointVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[f.perm[i]];
  for (std::size_t i = 1; i < n; ++i) {
    double s = x[i];
    for (std::size_t j = 0; j < i; ++j) s -= f.lu(i, j) * x[j];
    x[i] = s;
  }
  for (std::size_t ii = n; ii-- > 0;) {
    double s = x[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= f.lu(ii, j) * x[j];
    x[ii] = s / f.lu(ii, ii);
  }
  return x;
}

inline std::optional<PointVector> solve(const PointMatrix& m, const PointVector& b) {
  auto f = lu_factor(m);
  if (!f) return std::nullopt;
  return lu_solve(*f, b);
}

inline std::optional<PointMatrix> approx_inverse(const PointMatrix& m) {
  auto f = lu_factor(m);
  if (!f) return std::nullopt;
  const std::size_t n = m.rows();
  PointMatrix inv(n, n);
  PointVector e(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    e[j] = 1.0;
    const PointVector col = lu_solve(*f, e);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
    e[j] = 0.0;
  }
  return inv;
}

// R = (A^T A)^-1 A^T via the normal equations; for square A this is just the
// approximate inverse.
inline std::optional<PointMatrix> pseudo_solution_matrix(const PointMatrix& a) {
  require_shape(a.rows() >= a.cols(), "pseudo_solution_matrix: needs m >= n");
  const std::size_t m = a.rows(), n = a.cols();
  const PointMatrix at = transpose(a);
  const PointMatrix ata = matmul(at, a);
  auto f = lu_factor(ata);
  if (!f) return std::nullopt;
  PointMatrix r(n, m);
  PointVector col(n);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) col[i] = at(i, j);
    const PointVector x = lu_solve(*f, col);
    for (std::size_t i = 0; i < n; ++i) r(i, j) = x[i];
  }
  return r;
}

// Power iteration with the all-ones start vector; diagnostic only, callers
// must not treat the estimate as a rigorous bound.
inline double spectral_radius_estimate(const PointMatrix& g) {
  require_shape(g.rows() == g.cols(), "spectral_radius_estimate: matrix must be square");
  const std::size_t n = g.rows();
  if (n == 0) return 0.0;
  PointVector v(n, 1.0);
  double rho = 0.0;
  for (int it = 0; it < 200; ++it) {
    PointVector w = matvec(g, v);
    const double norm = norm_inf(w);
    if (norm == 0.0) return 0.0;
    const double prev_rho = rho;
    rho = norm;
    for (double& x : w) x /= norm;
    v = std::move(w);
    if (it > 0 && std::fabs(rho - prev_rho) <= 1e-12 * std::fabs(rho)) break;
  }
  return rho;
}

}  // namespace oils
