#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

#include "oils/interval_linalg.hpp"
#include "oils/point_linalg.hpp"

namespace oils {

// Reproducible randomness: every coefficient is drawn from its own one-step
// splitmix64 stream, keyed by (seed, draw index). The draw layout for an
// m x n system is fixed:
//   [0, mn)        A midpoints, row major
//   [mn, 2mn)      A radii, row major
//   [2mn, 2mn+m)   b midpoints
//   [2mn+m, 2mn+2m) b radii
// so identical seeds give bitwise-identical systems on any platform.
namespace rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// value of stream `seed` at position `index`, mapped to [0, 1)
inline double draw_unit(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t z = splitmix64(seed ^ splitmix64(index));
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

inline double draw_uniform(std::uint64_t seed, std::uint64_t index, double lo, double hi) {
  return lo + (hi - lo) * draw_unit(seed, index);
}

// Stateful view over the same stream, for sequential consumers.
struct Stream {
  std::uint64_t seed;
  std::uint64_t index = 0;
  explicit Stream(std::uint64_t s) : seed(s) {}
  double unit() { return draw_unit(seed, index++); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
};

}  // namespace rng

struct GeneratorConfig {
  std::size_t m = 0, n = 0;
  int maxradius_exponent = -3;  // radii drawn uniformly from [0, 10^exponent]
  double midpoint_range = 25.0;
  std::uint64_t seed = 1;

  double max_radius() const { return std::pow(10.0, maxradius_exponent); }
  // the paper's stopping-parameter convention: 10^(maximum radius - 2)
  double stopping_epsilon() const { return std::pow(10.0, maxradius_exponent - 2); }
};

struct OilsSystem {
  IntervalMatrix A;
  IntervalVector b;
  std::optional<GeneratorConfig> meta;
};

namespace detail {

inline IntervalMatrix gen_matrix(const GeneratorConfig& cfg) {
  const std::size_t mn = cfg.m * cfg.n;
  IntervalMatrix a(cfg.m, cfg.n, Interval(0.0));
  for (std::size_t k = 0; k < mn; ++k) {
    const double mid = rng::draw_uniform(cfg.seed, k, -cfg.midpoint_range, cfg.midpoint_range);
    const double rad = rng::draw_uniform(cfg.seed, mn + k, 0.0, cfg.max_radius());
    a.data()[k] = Interval(mid - rad, mid + rad);
  }
  return a;
}

}  // namespace detail

inline OilsSystem gen_system(const GeneratorConfig& cfg) {
  require_shape(cfg.m >= cfg.n && cfg.n >= 1, "gen_system: needs m >= n >= 1");
  OilsSystem sys;
  sys.A = detail::gen_matrix(cfg);
  const std::size_t mn = cfg.m * cfg.n;
  sys.b.resize(cfg.m, Interval(0.0));
  for (std::size_t i = 0; i < cfg.m; ++i) {
    const double mid =
        rng::draw_uniform(cfg.seed, 2 * mn + i, -cfg.midpoint_range, cfg.midpoint_range);
    const double rad = rng::draw_uniform(cfg.seed, 2 * mn + cfg.m + i, 0.0, cfg.max_radius());
    sys.b[i] = Interval(mid - rad, mid + rad);
  }
  sys.meta = cfg;
  return sys;
}

// System with a known solution: A is drawn as usual, b is centered on an
// enclosure of mid(A) * x_star and widened by the drawn radii, so the
// midpoint instance witnesses x_star regardless of rounding.
inline OilsSystem gen_seeded_solvable(const GeneratorConfig& cfg, const PointVector& x_star) {
  require_shape(cfg.m >= cfg.n && cfg.n >= 1, "gen_seeded_solvable: needs m >= n >= 1");
  require_shape(x_star.size() == cfg.n, "gen_seeded_solvable: solution size mismatch");
  OilsSystem sys;
  sys.A = detail::gen_matrix(cfg);
  const IntervalVector center = interval_matvec(mid(sys.A), x_star);
  const std::size_t mn = cfg.m * cfg.n;
  sys.b.resize(cfg.m, Interval(0.0));
  for (std::size_t i = 0; i < cfg.m; ++i) {
    const double rad = rng::draw_uniform(cfg.seed, 2 * mn + cfg.m + i, 0.0, cfg.max_radius());
    sys.b[i] = Interval(rnd::sub_down(center[i].lo(), rad), rnd::add_up(center[i].hi(), rad));
  }
  sys.meta = cfg;
  return sys;
}

}  // namespace oils
