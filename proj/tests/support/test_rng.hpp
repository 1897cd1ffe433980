#pragma once

#include <cstdint>

#include "oils/interval.hpp"

// Small deterministic RNG for tests (splitmix64), independent of the
// library's generator module.
namespace testrng {

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next_u64() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  oils::Interval interval(double span = 10.0) {
    const double a = uniform(-span, span);
    const double b = uniform(-span, span);
    return a <= b ? oils::Interval(a, b) : oils::Interval(b, a);
  }

  // random sub-interval of x
  oils::Interval inside(const oils::Interval& x) {
    const double a = uniform(x.lo(), x.hi());
    const double b = uniform(x.lo(), x.hi());
    return a <= b ? oils::Interval(a, b) : oils::Interval(b, a);
  }

  double point_in(const oils::Interval& x) { return uniform(x.lo(), x.hi()); }
};

}  // namespace testrng
