#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "oils/interval.hpp"

namespace oils {

// Dense row-major rectangular array. T is double (point structures) or
// Interval (interval structures).
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, const T& value = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, value) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n, T{0.0});
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1.0};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool same_shape(const Mat& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

  bool operator==(const Mat& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using PointMatrix = Mat<double>;
using IntervalMatrix = Mat<Interval>;
using PointVector = std::vector<double>;
using IntervalVector = std::vector<Interval>;

// Sign vector of a point vector: +1 for x_i >= 0, -1 otherwise.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int s : entries_)
      if (s != 1 && s != -1) throw std::invalid_argument("SignVector: entries must be +-1");
  }
  static SignVector of(const PointVector& x) {
    std::vector<int> s(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] >= 0.0 ? 1 : -1;
    return SignVector(std::move(s));
  }

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }

 private:
  std::vector<int> entries_;
};

inline void require_shape(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace oils
