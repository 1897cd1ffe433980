#pragma once

#include <optional>

#include "oils/generator.hpp"
#include "oils/interval_linalg.hpp"
#include "oils/outcome.hpp"
#include "oils/point_linalg.hpp"

namespace oils {

// Witness data for the enclosure theorem: with G = |I - R Ac| + |R| Ad and
// g = |R(Ac x0 - bc)| + |R|(Ad |x0| + bd), any d > 0 with G d + g < d yields
// Sigma <= [x0 - d, x0 + d]. G and g are stored as upward-rounded
// overestimates, which keeps the acceptance test G d + g < d rigorous.
struct RohnCertificate {
  PointMatrix R;
  PointVector x0;
  PointMatrix G;
  PointVector g;
  PointVector d;
  PointVector f;
};

namespace detail {

// upward-rounded a*x + y for nonnegative structures
inline PointVector affine_up(const PointMatrix& a, const PointVector& x, const PointVector& y) {
  PointVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double acc = y[i];
    for (std::size_t j = 0; j < a.cols(); ++j)
      acc = rnd::add_up(acc, rnd::mul_up(a(i, j), x[j]));
    out[i] = acc;
  }
  return out;
}

}  // namespace detail

// Iterate d <- G d + g + f from d = 0 until the hypothesis G d + g < d holds
// (checked in upward-rounded arithmetic). Terminates when the spectral radius
// of G is below one; a power-iteration estimate clearly above one fails fast,
// the hypothesis test itself remains the only acceptance gate.
inline std::optional<PointVector> find_d(const PointMatrix& G, const PointVector& g,
                                         const PointVector& f, std::size_t max_steps = 1000) {
  require_shape(G.rows() == G.cols() && G.rows() == g.size() && g.size() == f.size(),
                "find_d: shape mismatch");
  if (spectral_radius_estimate(G) > 1.05) return std::nullopt;
  const std::size_t n = g.size();
  PointVector d(n, 0.0);
  PointVector gf(n);
  for (std::size_t i = 0; i < n; ++i) gf[i] = rnd::add_up(g[i], f[i]);
  for (std::size_t step = 0; step < max_steps; ++step) {
    d = detail::affine_up(G, d, gf);
    const PointVector test = detail::affine_up(G, d, g);
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = test[i] < d[i];
    if (ok) return d;
  }
  return std::nullopt;
}

namespace detail {

inline std::optional<RohnCertificate> build_certificate(PointMatrix R, const PointMatrix& ac,
                                                        const PointMatrix& ad,
                                                        const PointVector& bc,
                                                        const PointVector& bd, PointVector x0,
                                                        PointVector f) {
  const std::size_t n = ac.cols();
  const std::size_t m = ac.rows();
  // G = |I - R Ac| + |R| Ad, overestimated. The products run in plain
  // round-to-nearest and are inflated by the a priori dot-product bound
  // |fl(x.y) - x.y| <= gamma_m |x|.|y| (doubled for the secondary roundings),
  // which keeps the d-test rigorous at a fraction of the cost of directed
  // accumulation; this is the hot loop of the iterative refinement.
  const PointMatrix abs_r = oils::abs(R);
  const PointMatrix abs_ac = oils::abs(ac);
  const PointMatrix p = matmul(R, ac);
  const PointMatrix q = matmul(abs_r, ad);
  const PointMatrix s = matmul(abs_r, abs_ac);
  const double unit = std::numeric_limits<double>::epsilon() / 2;
  const double gamma2 = 2.0 * static_cast<double>(m + 2) * unit;
  PointMatrix G(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double eye = i == j ? 1.0 : 0.0;
      const double e_mag = std::fabs(eye - p(i, j));
      double up = rnd::add_up(e_mag, rnd::mul_up(gamma2, rnd::add_up(e_mag, s(i, j))));
      up = rnd::add_up(up, rnd::add_up(q(i, j), rnd::mul_up(gamma2, q(i, j))));
      G(i, j) = rnd::add_up(up, 1e-270);
    }
  // g = |R(Ac x0 - bc)| + |R|(Ad |x0| + bd), overestimated
  IntervalVector resid = interval_matvec(ac, x0);
  for (std::size_t i = 0; i < resid.size(); ++i) resid[i] = resid[i] - Interval(bc[i]);
  const IntervalVector r_resid = mul(R, resid);
  const PointVector ax = affine_up(ad, oils::abs(x0), bd);
  PointVector g(n);
  for (std::size_t i = 0; i < n; ++i) {
    double up = 0.0;
    for (std::size_t k = 0; k < ax.size(); ++k)
      up = rnd::add_up(up, rnd::mul_up(abs_r(i, k), ax[k]));
    g[i] = rnd::add_up(r_resid[i].mag(), up);
  }
  auto d = find_d(G, g, f);
  if (!d) return std::nullopt;
  return RohnCertificate{std::move(R), std::move(x0), std::move(G), std::move(g), std::move(*d),
                         std::move(f)};
}

inline IntervalVector certificate_box(const RohnCertificate& cert) {
  IntervalVector box(cert.x0.size(), Interval(0.0));
  for (std::size_t i = 0; i < box.size(); ++i)
    box[i] = Interval(rnd::sub_down(cert.x0[i], cert.d[i]), rnd::add_up(cert.x0[i], cert.d[i]));
  return box;
}

}  // namespace detail

// f defaulting follows the benchmark convention 10^(max radius exponent - 2);
// degenerate all-point systems fall back to a tiny positive value.
inline double suggested_f_epsilon(const IntervalMatrix& a, const IntervalVector& b) {
  double max_rad = 0.0;
  for (const Interval& x : a.data()) max_rad = std::max(max_rad, x.rad());
  for (const Interval& x : b) max_rad = std::max(max_rad, x.rad());
  if (max_rad <= 0.0) return 1e-10;
  return std::pow(10.0, std::floor(std::log10(max_rad)) - 2.0);
}

struct RohnResult {
  SolveOutcome outcome;
  std::optional<RohnCertificate> certificate;
};

inline RohnResult rohn_basic(const IntervalMatrix& a, const IntervalVector& b,
                             const PointVector& f) {
  require_shape(a.rows() == b.size(), "rohn_basic: shape mismatch");
  require_shape(f.size() == a.cols(), "rohn_basic: f size mismatch");
  const PointMatrix ac = mid(a);
  auto r = pseudo_solution_matrix(ac);
  if (!r) return {SolveOutcome::failure(FailureReason::SingularMatrix), std::nullopt};
  const PointVector x0 = matvec(*r, mid(b));
  auto cert = detail::build_certificate(std::move(*r), ac, rad(a), mid(b), rad(b), x0, f);
  if (!cert) return {SolveOutcome::failure(FailureReason::NoConvergence), std::nullopt};
  SolveOutcome out = SolveOutcome::enclosure(detail::certificate_box(*cert));
  return {std::move(out), std::move(cert)};
}

inline RohnResult rohn_basic(const IntervalMatrix& a, const IntervalVector& b) {
  return rohn_basic(a, b, PointVector(a.cols(), suggested_f_epsilon(a, b)));
}

struct RohnIterationOptions {
  // How the instance A' in A is drawn, coefficientwise from stream `seed`.
  enum class Draw { Uniform, Vertex } draw = Draw::Uniform;
  // Where x0 comes from in each round: recomputed as R' bc (a fresh run of
  // the basic method, the reading that reproduces the paper's ratios), the
  // midpoint of the current intersection, or frozen at the basic x0.
  enum class X0Policy { RecomputeFromR, RefreshMidpoint, KeepOriginal } x0 =
      X0Policy::RecomputeFromR;
};

// Randomized refinement: each round draws an instance A' in A, rebuilds the
// certificate with R' from A', and intersects the boxes. Rounds that fail
// (singular draw, no d, empty intersection on an unsolvable system) are
// skipped; the final intersection is returned.
inline SolveOutcome rohn_iterative(const IntervalMatrix& a, const IntervalVector& b,
                                   const PointVector& f, std::size_t iterations,
                                   std::uint64_t seed, RohnIterationOptions options = {}) {
  RohnResult base = rohn_basic(a, b, f);
  if (!base.outcome.is_enclosure()) return base.outcome;
  IntervalVector enc = base.outcome.box;
  const PointMatrix ac = mid(a);
  const PointMatrix ad = rad(a);
  const PointVector bc = mid(b);
  const PointVector bd = rad(b);
  rng::Stream stream(seed);
  PointMatrix inst(a.rows(), a.cols());
  for (std::size_t it = 0; it < iterations; ++it) {
    for (std::size_t k = 0; k < inst.data().size(); ++k) {
      const Interval& cell = a.data()[k];
      inst.data()[k] = options.draw == RohnIterationOptions::Draw::Vertex
                           ? (stream.unit() < 0.5 ? cell.lo() : cell.hi())
                           : stream.uniform(cell.lo(), cell.hi());
    }
    auto r = pseudo_solution_matrix(inst);
    if (!r) continue;
    PointVector x0;
    switch (options.x0) {
      case RohnIterationOptions::X0Policy::RecomputeFromR: x0 = matvec(*r, bc); break;
      case RohnIterationOptions::X0Policy::RefreshMidpoint: x0 = mid(enc); break;
      case RohnIterationOptions::X0Policy::KeepOriginal: x0 = base.certificate->x0; break;
    }
    auto cert = detail::build_certificate(std::move(*r), ac, ad, bc, bd, x0, f);
    if (!cert) continue;
    IntervalVector next;
    if (!box_intersect(enc, detail::certificate_box(*cert), next)) continue;
    enc = std::move(next);
  }
  SolveOutcome out = SolveOutcome::enclosure(std::move(enc));
  out.stats.iterations = iterations;
  return out;
}

}  // namespace oils
