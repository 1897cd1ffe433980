#pragma once

#include <cmath>

#include "oils/mat.hpp"

namespace oils {

inline PointMatrix mid(const IntervalMatrix& m) {
  PointMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.data().size(); ++i) out.data()[i] = m.data()[i].mid();
  return out;
}

inline PointMatrix rad(const IntervalMatrix& m) {
  PointMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.data().size(); ++i) out.data()[i] = m.data()[i].rad();
  return out;
}

inline PointMatrix mag(const IntervalMatrix& m) {
  PointMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.data().size(); ++i) out.data()[i] = m.data()[i].mag();
  return out;
}

inline PointVector mid(const IntervalVector& v) {
  PointVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].mid();
  return out;
}

inline PointVector rad(const IntervalVector& v) {
  PointVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].rad();
  return out;
}

inline PointVector widths(const IntervalVector& v) {
  PointVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].width();
  return out;
}

inline IntervalMatrix to_interval(const PointMatrix& m) {
  IntervalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.data().size(); ++i) out.data()[i] = Interval(m.data()[i]);
  return out;
}

inline IntervalVector to_interval(const PointVector& v) {
  return IntervalVector(v.begin(), v.end());
}

// (M v)_i = sum_j M_ij v_j, accumulated left to right in interval arithmetic.
inline IntervalVector mul(const IntervalMatrix& m, const IntervalVector& v) {
  require_shape(m.cols() == v.size(), "interval matvec: shape mismatch");
  IntervalVector out(m.rows(), Interval(0.0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Interval acc(0.0);
    for (std::size_t j = 0; j < m.cols(); ++j) acc = acc + m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

inline IntervalVector mul(const PointMatrix& c, const IntervalVector& v) {
  require_shape(c.cols() == v.size(), "point*interval matvec: shape mismatch");
  IntervalVector out(c.rows(), Interval(0.0));
  for (std::size_t i = 0; i < c.rows(); ++i) {
    Interval acc(0.0);
    for (std::size_t j = 0; j < c.cols(); ++j) acc = acc + scale(c(i, j), v[j]);
    out[i] = acc;
  }
  return out;
}

inline IntervalMatrix mul(const PointMatrix& c, const IntervalMatrix& m) {
  require_shape(c.cols() == m.rows(), "point*interval matmul: shape mismatch");
  IntervalMatrix out(c.rows(), m.cols(), Interval(0.0));
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Interval acc(0.0);
      for (std::size_t k = 0; k < c.cols(); ++k) acc = acc + scale(c(i, k), m(k, j));
      out(i, j) = acc;
    }
  return out;
}

inline IntervalVector mul(const IntervalMatrix& m, const PointVector& v) {
  return mul(m, to_interval(v));
}

// Rigorous enclosure of the exact product of two point matrices.
inline IntervalMatrix interval_product(const PointMatrix& a, const PointMatrix& b) {
  require_shape(a.cols() == b.rows(), "interval_product: shape mismatch");
  IntervalMatrix out(a.rows(), b.cols(), Interval(0.0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Interval acc(0.0);
      for (std::size_t k = 0; k < a.cols(); ++k)
        acc = acc + Interval(rnd::mul_down(a(i, k), b(k, j)), rnd::mul_up(a(i, k), b(k, j)));
      out(i, j) = acc;
    }
  return out;
}

inline IntervalVector interval_matvec(const PointMatrix& a, const PointVector& v) {
  require_shape(a.cols() == v.size(), "interval_matvec: shape mismatch");
  IntervalVector out(a.rows(), Interval(0.0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Interval acc(0.0);
    for (std::size_t j = 0; j < v.size(); ++j)
      acc = acc + Interval(rnd::mul_down(a(i, j), v[j]), rnd::mul_up(a(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

inline IntervalVector add(const IntervalVector& a, const IntervalVector& b) {
  require_shape(a.size() == b.size(), "interval vector add: shape mismatch");
  IntervalVector out(a.size(), Interval(0.0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline IntervalVector sub(const IntervalVector& a, const IntervalVector& b) {
  require_shape(a.size() == b.size(), "interval vector sub: shape mismatch");
  IntervalVector out(a.size(), Interval(0.0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline bool box_contains_point(const IntervalVector& box, const PointVector& x) {
  if (box.size() != x.size()) return false;
  for (std::size_t i = 0; i < box.size(); ++i)
    if (!box[i].contains(x[i])) return false;
  return true;
}

inline bool box_contains_box(const IntervalVector& outer, const IntervalVector& inner) {
  if (outer.size() != inner.size()) return false;
  for (std::size_t i = 0; i < outer.size(); ++i)
    if (!outer[i].contains(inner[i])) return false;
  return true;
}

// Componentwise intersection; any empty component empties the whole box.
inline bool box_intersect(const IntervalVector& a, const IntervalVector& b, IntervalVector& out) {
  require_shape(a.size() == b.size(), "box intersect: shape mismatch");
  out.assign(a.size(), Interval(0.0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = intersect(a[i], b[i]);
    if (out[i].is_empty()) return false;
  }
  return true;
}

}  // namespace oils
