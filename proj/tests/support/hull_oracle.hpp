#pragma once

#include <optional>
#include <vector>

#include "oils/lp_hull.hpp"
#include "oils/point_linalg.hpp"

// Brute-force interval-hull reference for n <= 3, independent of the simplex:
// within each orthant the feasible set is a convex polyhedron, so every
// coordinate extreme lies at a vertex, i.e. the intersection of n active
// constraint hyperplanes. Enumerate all n-subsets of the orthant's rows
// (plus a large bounding box to expose unbounded sets), keep the candidate
// points that satisfy every constraint up to slack, and aggregate.
namespace oracle {

struct BruteHull {
  bool empty = true;
  bool bounded = true;
  oils::PointVector lo, hi;
};

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t rows) {
  const std::size_t n = idx.size();
  for (std::size_t k = n; k-- > 0;) {
    if (idx[k] < rows - n + k) {
      ++idx[k];
      for (std::size_t l = k + 1; l < n; ++l) idx[l] = idx[l - 1] + 1;
      return true;
    }
  }
  return false;
}

inline BruteHull bruteforce_hull(const oils::IntervalMatrix& a, const oils::IntervalVector& b,
                                 double box_bound = 1e7) {
  const std::size_t n = a.cols();
  BruteHull out;
  out.lo.assign(n, oils::rnd::kInf);
  out.hi.assign(n, -oils::rnd::kInf);

  std::vector<int> z(n, +1);
  for (std::size_t orthant = 0; orthant < (std::size_t{1} << n); ++orthant) {
    for (std::size_t j = 0; j < n; ++j) z[j] = (orthant >> j) & 1 ? -1 : +1;
    const oils::OrthantLP lp = oils::build_orthant_lp(a, b, oils::SignVector(z), 0, false);

    // constraint rows plus bounding box rows +-x_j <= box_bound
    const std::size_t base_rows = lp.rows.rows();
    const std::size_t rows = base_rows + 2 * n;
    oils::PointMatrix g(rows, n, 0.0);
    oils::PointVector h(rows, 0.0);
    for (std::size_t i = 0; i < base_rows; ++i) {
      for (std::size_t j = 0; j < n; ++j) g(i, j) = lp.rows(i, j);
      h[i] = lp.rhs[i];
    }
    for (std::size_t j = 0; j < n; ++j) {
      g(base_rows + 2 * j, j) = 1.0;
      h[base_rows + 2 * j] = box_bound;
      g(base_rows + 2 * j + 1, j) = -1.0;
      h[base_rows + 2 * j + 1] = box_bound;
    }

    // all n-subsets of rows as candidate active sets
    std::vector<std::size_t> idx(n);
    for (std::size_t j = 0; j < n; ++j) idx[j] = j;
    for (;;) {
      oils::PointMatrix sq(n, n);
      oils::PointVector rhs(n);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) sq(r, c) = g(idx[r], c);
        rhs[r] = h[idx[r]];
      }
      if (auto p = oils::solve(sq, rhs)) {
        bool feasible = true;
        for (std::size_t i = 0; i < rows && feasible; ++i) {
          double dot = 0.0, scale = 1.0;
          for (std::size_t j = 0; j < n; ++j) {
            dot += g(i, j) * (*p)[j];
            scale = std::max(scale, std::fabs(g(i, j) * (*p)[j]));
          }
          feasible = dot <= h[i] + 1e-8 * std::max(scale, std::fabs(h[i]));
        }
        if (feasible) {
          out.empty = false;
          for (std::size_t j = 0; j < n; ++j) {
            if (std::fabs((*p)[j]) > 0.999999 * box_bound) out.bounded = false;
            out.lo[j] = std::min(out.lo[j], (*p)[j]);
            out.hi[j] = std::max(out.hi[j], (*p)[j]);
          }
        }
      }
      if (!next_combination(idx, rows)) break;
    }
  }
  return out;
}

}  // namespace oracle
