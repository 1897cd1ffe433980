#pragma once

#include <cmath>
#include <vector>

#include "oils/point_linalg.hpp"

// Independent spectral-radius reference for small nonnegative matrices:
// characteristic polynomial via Faddeev-LeVerrier, then a downward scan for
// the largest real root (the Perron root of a nonnegative matrix).
namespace oracle {

inline double trace(const oils::PointMatrix& m) {
  double t = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

// coefficients c so that p(x) = x^n - c[0] x^(n-1) - ... - c[n-1]
inline std::vector<double> charpoly(const oils::PointMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<double> c(n);
  oils::PointMatrix mk = a;
  for (std::size_t k = 0; k < n; ++k) {
    c[k] = trace(mk) / static_cast<double>(k + 1);
    if (k + 1 == n) break;
    oils::PointMatrix shifted = mk;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= c[k];
    mk = oils::matmul(a, shifted);
  }
  return c;
}

inline double charpoly_eval(const std::vector<double>& c, double x) {
  double p = 1.0;
  for (double ck : c) p = p * x - ck;
  return p;
}

inline double perron_root_scan(const oils::PointMatrix& a) {
  const auto c = charpoly(a);
  const double hi = oils::norm_inf(a) + 1.0;
  const int grid = 200000;
  double upper = hi;
  double lower = -1.0;
  for (int i = grid; i-- > 0;) {  // largest sign change wins
    const double x0 = hi * i / grid;
    const double x1 = hi * (i + 1) / grid;
    if (charpoly_eval(c, x0) <= 0.0 && charpoly_eval(c, x1) >= 0.0) {
      lower = x0;
      upper = x1;
      break;
    }
  }
  if (lower < 0.0) return 0.0;  // no nonnegative real root found
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lower + upper);
    if (charpoly_eval(c, mid) <= 0.0)
      lower = mid;
    else
      upper = mid;
  }
  return 0.5 * (lower + upper);
}

}  // namespace oracle
