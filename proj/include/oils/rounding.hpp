#pragma once

#include <cmath>
#include <limits>

// Directed-rounding scalar kernels built on error-free transformations.
//
// Each operation is evaluated once in round-to-nearest; the exact rounding
// error is recovered (2Sum for +/-, fma residual for * and /) and the result
// is stepped one ulp outward only when the rounded value lies on the wrong
// side. The returned bound therefore equals the correctly rounded
// directed-rounding result, without touching the floating-point environment,
// so the kernels are safe to call from concurrent threads.
//
// Near the subnormal range the residual terms can lose their sign; those
// cases take an unconditional one-ulp step instead, which keeps the bound
// valid at the cost of (at most) one ulp of slack.

namespace oils::rnd {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kMaxReal = std::numeric_limits<double>::max();

// Magnitudes below these make the fma residual of * and / untrustworthy.
inline constexpr double kMulGuard = 1e-290;
inline constexpr double kDivGuard = 1e-280;

inline double prev(double x) { return std::nextafter(x, -kInf); }
inline double next(double x) { return std::nextafter(x, kInf); }

inline double add_down(double a, double b) {
  const double s = a + b;
  if (!std::isfinite(s)) {
    if (std::isinf(a) || std::isinf(b)) return s;  // exact infinite endpoint
    return s > 0 ? kMaxReal : -kInf;               // overflow of finite operands
  }
  const double bv = s - a;
  const double err = (a - (s - bv)) + (b - bv);
  return err < 0.0 ? prev(s) : s;
}

inline double add_up(double a, double b) {
  const double s = a + b;
  if (!std::isfinite(s)) {
    if (std::isinf(a) || std::isinf(b)) return s;
    return s < 0 ? -kMaxReal : kInf;
  }
  const double bv = s - a;
  const double err = (a - (s - bv)) + (b - bv);
  return err > 0.0 ? next(s) : s;
}

inline double sub_down(double a, double b) { return add_down(a, -b); }
inline double sub_up(double a, double b) { return add_up(a, -b); }

inline double mul_down(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;  // also covers the 0 * inf endpoint convention
  if (std::isinf(a) || std::isinf(b)) return a * b;
  const double p = a * b;
  if (!std::isfinite(p)) return p > 0 ? kMaxReal : p;
  if (std::fabs(p) < kMulGuard) return prev(p);
  const double err = std::fma(a, b, -p);
  return err < 0.0 ? prev(p) : p;
}

inline double mul_up(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  if (std::isinf(a) || std::isinf(b)) return a * b;
  const double p = a * b;
  if (!std::isfinite(p)) return p < 0 ? -kMaxReal : p;
  if (std::fabs(p) < kMulGuard) return next(p);
  const double err = std::fma(a, b, -p);
  return err > 0.0 ? next(p) : p;
}

// Quotient bounds; the divisor must be nonzero.
inline double div_down(double a, double b) {
  if (a == 0.0) return 0.0;
  if (std::isinf(a)) return ((a > 0) == (b > 0)) ? kInf : -kInf;
  if (std::isinf(b)) return 0.0;  // finite / inf: 0 bounds the quotient set
  const double q = a / b;
  if (!std::isfinite(q)) return q > 0 ? kMaxReal : q;
  if (std::fabs(q) < kDivGuard || std::fabs(a) < kDivGuard) return prev(q);
  const double r = std::fma(q, b, -a);  // exact: q*b - a, so a/b = q - r/b
  const bool above = (r > 0.0) == (b > 0.0);
  return (above && r != 0.0) ? prev(q) : q;
}

inline double div_up(double a, double b) {
  if (a == 0.0) return 0.0;
  if (std::isinf(a)) return ((a > 0) == (b > 0)) ? kInf : -kInf;
  if (std::isinf(b)) return 0.0;
  const double q = a / b;
  if (!std::isfinite(q)) return q < 0 ? -kMaxReal : q;
  if (std::fabs(q) < kDivGuard || std::fabs(a) < kDivGuard) return next(q);
  const double r = std::fma(q, b, -a);
  const bool below = (r > 0.0) != (b > 0.0);
  return (below && r != 0.0) ? next(q) : q;
}

}  // namespace oils::rnd
