#pragma once

#include "oils/interval_linalg.hpp"
#include "oils/outcome.hpp"
#include "oils/point_linalg.hpp"
#include "oils/solver_iterative.hpp"

namespace oils {

// Square reformulation of the least-squares normal equations:
//   [I  A ] (y)   (b)
//   [A^T 0] (x) = (0)
// The identity and zero blocks are exact point intervals.
struct AugmentedSystem {
  IntervalMatrix M;
  IntervalVector rhs;
  std::size_t m = 0, n = 0;
};

inline AugmentedSystem build_augmented(const IntervalMatrix& a, const IntervalVector& b) {
  require_shape(a.rows() == b.size(), "build_augmented: shape mismatch");
  const std::size_t m = a.rows(), n = a.cols();
  AugmentedSystem s;
  s.m = m;
  s.n = n;
  s.M = IntervalMatrix(m + n, m + n, Interval(0.0));
  for (std::size_t i = 0; i < m; ++i) s.M(i, i) = Interval(1.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      s.M(i, m + j) = a(i, j);
      s.M(m + j, i) = a(i, j);
    }
  s.rhs.assign(m + n, Interval(0.0));
  for (std::size_t i = 0; i < m; ++i) s.rhs[i] = b[i];
  return s;
}

// Verified solver for square interval systems via the Krawczyk operator
//   K(X) = xc + C(rhs - M xc) + (I - C M)(X - xc),  C = mid(M)^-1 approx.
// A box with K(X) in the interior of X certifies regularity of M and
// encloses the united solution set; the box is then refined by intersection.
inline SolveOutcome krawczyk_solve(const IntervalMatrix& m_mat, const IntervalVector& rhs,
                                   const IterationConfig& cfg) {
  require_shape(m_mat.rows() == m_mat.cols() && m_mat.rows() == rhs.size(),
                "krawczyk_solve: shape mismatch");
  const std::size_t n = rhs.size();
  const PointMatrix mc = mid(m_mat);
  auto c = approx_inverse(mc);
  if (!c) return SolveOutcome::failure(FailureReason::SingularMatrix);
  const PointVector xc = matvec(*c, mid(rhs));

  // z = C (rhs - M xc)
  IntervalVector resid = rhs;
  {
    const IntervalVector mxc = mul(m_mat, to_interval(xc));
    for (std::size_t i = 0; i < n; ++i) resid[i] = resid[i] - mxc[i];
  }
  const IntervalVector z = mul(*c, resid);

  // h = I - C M as a midpoint/radius enclosure: the products run in plain
  // round-to-nearest and the radius absorbs |C| rad(M) plus the a priori
  // dot-product bound gamma_n |C||Mc| (doubled for secondary roundings)
  IntervalMatrix h(n, n, Interval(0.0));
  {
    const PointMatrix md = rad(m_mat);
    const PointMatrix abs_c = oils::abs(*c);
    const PointMatrix p = matmul(*c, mc);
    const PointMatrix s = matmul(abs_c, oils::abs(mc));
    const PointMatrix q = matmul(abs_c, md);
    const double unit = std::numeric_limits<double>::epsilon() / 2;
    const double gamma2 = 2.0 * static_cast<double>(n + 2) * unit;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const double hc = (i == j ? 1.0 : 0.0) - p(i, j);
        double hr = rnd::mul_up(gamma2, rnd::add_up(rnd::add_up(s(i, j), q(i, j)),
                                                    std::fabs(hc)));
        hr = rnd::add_up(hr, rnd::add_up(q(i, j), 1e-270));
        h(i, j) = Interval(rnd::sub_down(hc, hr), rnd::add_up(hc, hr));
      }
  }

  const auto apply_k = [&](const IntervalVector& x) {
    IntervalVector shifted(n, Interval(0.0));
    for (std::size_t i = 0; i < n; ++i) shifted[i] = x[i] - Interval(xc[i]);
    const IntervalVector hx = mul(h, shifted);
    IntervalVector out(n, Interval(0.0));
    for (std::size_t i = 0; i < n; ++i) out[i] = Interval(xc[i]) + z[i] + hx[i];
    return out;
  };

  // epsilon inflation: blow the candidate up and feed each Krawczyk image
  // forward until the image lands in the candidate's interior
  IntervalVector x(n, Interval(0.0));
  for (std::size_t i = 0; i < n; ++i) x[i] = Interval(xc[i]) + z[i];
  bool verified = false;
  for (int round = 0; round < 15 && !verified; ++round) {
    IntervalVector y = x;
    for (std::size_t i = 0; i < n; ++i) {
      const double grow = 0.1 * y[i].rad() + 1e-300;
      y[i] = Interval(rnd::sub_down(y[i].lo(), grow), rnd::add_up(y[i].hi(), grow));
    }
    const IntervalVector ky = apply_k(y);
    verified = true;
    for (std::size_t i = 0; i < n && verified; ++i) verified = y[i].strictly_contains(ky[i]);
    x = ky;  // the image is the next candidate (and the enclosure on success)
  }
  if (!verified) return SolveOutcome::failure(FailureReason::NoInclusion);

  std::size_t steps = 1;
  bool converged = false;
  for (; steps < cfg.max_iterations; ++steps) {
    const IntervalVector prev = x;
    const IntervalVector kx = apply_k(x);
    for (std::size_t i = 0; i < n; ++i) x[i] = intersect(x[i], kx[i]);
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

// Least-squares style enclosure: solve the augmented square system and keep
// the x block. The result encloses least-squares solutions as well, so this
// method returns a box even for unsolvable systems and never claims
// unsolvability.
inline SolveOutcome solve_lsq(const IntervalMatrix& a, const IntervalVector& b,
                              const IterationConfig& cfg) {
  const AugmentedSystem sys = build_augmented(a, b);
  SolveOutcome full = krawczyk_solve(sys.M, sys.rhs, cfg);
  if (!full.is_enclosure()) return full;
  SolveOutcome out = SolveOutcome::enclosure(
      IntervalVector(full.box.begin() + static_cast<long>(sys.m), full.box.end()));
  out.stats = full.stats;
  return out;
}

}  // namespace oils
