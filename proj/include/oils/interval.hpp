#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "oils/rounding.hpp"

namespace oils {

// Closed real interval [lo, hi]; endpoints may be infinite. The empty set is
// a distinguished value (only intersection produces it, arithmetic never
// does). All arithmetic rounds outward, so the result always contains the
// exact real set. Values are immutable after construction.
class Interval {
 public:
  Interval() : lo_(0.0), hi_(0.0) {}
  Interval(double point) : Interval(point, point) {}  // NOLINT: implicit by design
  Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (std::isnan(lo) || std::isnan(hi) || lo > hi)
      throw std::invalid_argument("Interval: invalid bounds");
  }

  static Interval empty() {
    Interval x;
    x.lo_ = rnd::kInf;
    x.hi_ = -rnd::kInf;
    return x;
  }
  static Interval whole_line() { return Interval(-rnd::kInf, rnd::kInf); }

  // [mid - rad, mid + rad], widened outward so the exact ball is contained.
  static Interval from_mid_rad(double mid, double rad) {
    if (rad < 0) throw std::invalid_argument("from_mid_rad: negative radius");
    return Interval(rnd::sub_down(mid, rad), rnd::add_up(mid, rad));
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  bool is_empty() const { return lo_ > hi_; }
  bool is_point() const { return lo_ == hi_; }
  bool is_bounded() const { return !is_empty() && std::isfinite(lo_) && std::isfinite(hi_); }

  // Midpoint in round-to-nearest; anchors at the finite endpoint when the
  // other one is infinite.
  double mid() const {
    if (std::isinf(lo_) && std::isinf(hi_)) return 0.0;
    if (std::isinf(lo_)) return hi_;
    if (std::isinf(hi_)) return lo_;
    double m = 0.5 * (lo_ + hi_);
    if (!std::isfinite(m)) m = 0.5 * lo_ + 0.5 * hi_;
    return m;
  }

  // Upper bound on the true radius, so <mid, rad> always covers [lo, hi].
  double rad() const {
    if (lo_ == hi_) return 0.0;
    const double m = mid();
    return std::max(rnd::sub_up(hi_, m), rnd::sub_up(m, lo_));
  }

  double width() const { return hi_ - lo_; }
  double mag() const { return std::max(std::fabs(lo_), std::fabs(hi_)); }
  double mig() const {
    if (contains(0.0)) return 0.0;
    return std::min(std::fabs(lo_), std::fabs(hi_));
  }

  bool contains(double x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& other) const {
    if (other.is_empty()) return true;
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  bool strictly_contains(const Interval& other) const {
    if (other.is_empty()) return true;
    return lo_ < other.lo_ && other.hi_ < hi_;
  }

  bool operator==(const Interval& other) const {
    if (is_empty() && other.is_empty()) return true;
    return lo_ == other.lo_ && hi_ == other.hi_;
  }
  bool operator!=(const Interval& other) const { return !(*this == other); }

 private:
  double lo_, hi_;
};

inline Interval operator-(const Interval& a) { return Interval(-a.hi(), -a.lo()); }

inline Interval operator+(const Interval& a, const Interval& b) {
  return Interval(rnd::add_down(a.lo(), b.lo()), rnd::add_up(a.hi(), b.hi()));
}

inline Interval operator-(const Interval& a, const Interval& b) {
  return Interval(rnd::sub_down(a.lo(), b.hi()), rnd::sub_up(a.hi(), b.lo()));
}

inline Interval operator*(const Interval& a, const Interval& b) {
  const std::array<double, 2> xs{a.lo(), a.hi()};
  const std::array<double, 2> ys{b.lo(), b.hi()};
  double lo = rnd::kInf, hi = -rnd::kInf;
  for (double x : xs)
    for (double y : ys) {
      lo = std::min(lo, rnd::mul_down(x, y));
      hi = std::max(hi, rnd::mul_up(x, y));
    }
  return Interval(lo, hi);
}

// Point * interval: two directed products decided by the sign of the scalar.
inline Interval scale(double c, const Interval& x) {
  if (c >= 0.0) return Interval(rnd::mul_down(c, x.lo()), rnd::mul_up(c, x.hi()));
  return Interval(rnd::mul_down(c, x.hi()), rnd::mul_up(c, x.lo()));
}

// Ordinary interval division; nullopt when the divisor contains zero.
inline std::optional<Interval> divide(const Interval& a, const Interval& b) {
  if (b.contains(0.0)) return std::nullopt;
  const std::array<double, 2> xs{a.lo(), a.hi()};
  const std::array<double, 2> ys{b.lo(), b.hi()};
  double lo = rnd::kInf, hi = -rnd::kInf;
  for (double x : xs)
    for (double y : ys) {
      lo = std::min(lo, rnd::div_down(x, y));
      hi = std::max(hi, rnd::div_up(x, y));
    }
  return Interval(lo, hi);
}

inline Interval intersect(const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  const double lo = std::max(a.lo(), b.lo());
  const double hi = std::min(a.hi(), b.hi());
  if (lo > hi) return Interval::empty();
  return Interval(lo, hi);
}

inline Interval hull(const Interval& a, const Interval& b) {
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

// Solution set of  den * x = num  when 0 in den: zero, one, or two closed
// pieces (rays come out as half-infinite intervals, the whole line as one
// piece). Callers working with single intervals take the hull of the pieces.
struct ExtendedDivision {
  std::array<Interval, 2> part{Interval::empty(), Interval::empty()};
  int count = 0;
};

inline ExtendedDivision extended_divide(const Interval& num, const Interval& den) {
  ExtendedDivision out;
  if (!den.contains(0.0)) {
    out.part[0] = *divide(num, den);
    out.count = 1;
    return out;
  }
  if (num.contains(0.0)) {  // 0*x = 0 is satisfiable everywhere
    out.part[0] = Interval::whole_line();
    out.count = 1;
    return out;
  }
  if (den.is_point()) return out;  // den == [0,0], num misses 0: no solution
  const bool num_pos = num.lo() > 0.0;
  if (den.lo() < 0.0 && den.hi() > 0.0) {
    if (num_pos) {
      out.part[0] = Interval(-rnd::kInf, rnd::div_up(num.lo(), den.lo()));
      out.part[1] = Interval(rnd::div_down(num.lo(), den.hi()), rnd::kInf);
    } else {
      out.part[0] = Interval(-rnd::kInf, rnd::div_up(num.hi(), den.hi()));
      out.part[1] = Interval(rnd::div_down(num.hi(), den.lo()), rnd::kInf);
    }
    out.count = 2;
    return out;
  }
  if (den.hi() > 0.0) {  // den = [0, d+]
    out.part[0] = num_pos ? Interval(rnd::div_down(num.lo(), den.hi()), rnd::kInf)
                          : Interval(-rnd::kInf, rnd::div_up(num.hi(), den.hi()));
  } else {  // den = [d-, 0]
    out.part[0] = num_pos ? Interval(-rnd::kInf, rnd::div_up(num.lo(), den.lo()))
                          : Interval(rnd::div_down(num.hi(), den.lo()), rnd::kInf);
  }
  out.count = 1;
  return out;
}

}  // namespace oils
