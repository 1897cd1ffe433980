#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "oils/generator.hpp"
#include "oils/lp_hull.hpp"
#include "oils/solver_ge.hpp"
#include "oils/solver_iterative.hpp"
#include "oils/solver_lsq.hpp"
#include "oils/solver_rohn.hpp"

namespace oils {

// ratio(X, X_test) = (1/n) sum w(X_i) / w(X_i_test); the lower, the better.
// nullopt when shapes differ or the reference has a zero-width component.
inline std::optional<double> ratio(const IntervalVector& x, const IntervalVector& x_test) {
  if (x.size() != x_test.size() || x.empty()) return std::nullopt;
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double wt = x_test[i].width();
    if (wt == 0.0) return std::nullopt;  // degenerate reference
    acc += x[i].width() / wt;
  }
  return acc / static_cast<double>(x.size());
}

// One benchmark cell: a population of same-shaped random systems and the
// methods to run on it. Per-system seeds are cell.seed + index; the seeded
// solution (when seeded_solvable) and the refinement draws use fixed offsets
// of that stream so reports are reproducible bit for bit.
struct BenchCell {
  std::size_t m = 5, n = 3;
  int maxradius_exponent = -3;
  double midpoint_range = 25.0;
  std::size_t population = 30;
  std::uint64_t seed = 1;
  bool seeded_solvable = false;
  std::vector<std::string> methods;
  std::string reference;  // empty: no ratio column
};

struct BenchSuite {
  std::vector<BenchCell> cells;
  double x0_bound = 1e8;  // starting box half-width for the iterative methods
};

struct MethodAggregate {
  std::string method;
  std::size_t population = 0;
  std::size_t enclosures = 0, unsolvable = 0, unbounded = 0, failures = 0;
  std::size_t ratio_count = 0;
  double mean_ratio = 0.0;
  double mean_time_ns = 0.0;
  double median_time_ns = 0.0;
};

struct CellReport {
  BenchCell cell;
  std::vector<MethodAggregate> methods;
};

struct BenchReport {
  std::vector<CellReport> cells;
};

// Benchmark-facing method dispatch. The iterative methods start from the
// configured large box here (the standalone-method semantics the comparison
// tables use); the library default of a Rohn start stays available through
// solve_iterative itself.
inline SolveOutcome run_bench_method(const std::string& method, const OilsSystem& sys,
                                     double x0_bound) {
  const GeneratorConfig cfg = sys.meta.value_or(GeneratorConfig{sys.A.rows(), sys.A.cols()});
  const IterationConfig it_cfg{cfg.stopping_epsilon(), 20};
  const PointVector f(sys.A.cols(), cfg.stopping_epsilon());
  const std::uint64_t draw_seed = rng::splitmix64(cfg.seed ^ 0xB5AD4ECEDA1CE2A9ull);

  if (method == "ge") return solve_ge(sys.A, sys.b, false);
  if (method == "gepre") return solve_ge(sys.A, sys.b, true);
  if (method == "jacobi" || method == "gs") {
    const IntervalVector x0(sys.A.cols(), Interval(-x0_bound, x0_bound));
    return solve_iterative(sys.A, sys.b,
                           method == "gs" ? IterativeVariant::GaussSeidel
                                          : IterativeVariant::Jacobi,
                           it_cfg, x0);
  }
  if (method == "rohn") return rohn_basic(sys.A, sys.b, f).outcome;
  if (method.rfind("rohn-iter", 0) == 0) {
    std::size_t iterations = 10;
    if (const auto colon = method.find(':'); colon != std::string::npos)
      iterations = std::stoul(method.substr(colon + 1));
    return rohn_iterative(sys.A, sys.b, f, iterations, draw_seed);
  }
  if (method == "lsq") return solve_lsq(sys.A, sys.b, it_cfg);
  if (method == "hull") return hull(sys.A, sys.b);
  if (method == "hull-pre") {
    HullOptions opt;
    if (auto pre = rohn_basic(sys.A, sys.b, f); pre.outcome.is_enclosure())
      opt.presolve = std::move(pre.outcome.box);
    return hull(sys.A, sys.b, opt);
  }
  throw std::invalid_argument("unknown method: " + method);
}

inline OilsSystem make_bench_system(const BenchCell& cell, std::size_t index) {
  GeneratorConfig cfg{cell.m, cell.n, cell.maxradius_exponent, cell.midpoint_range,
                      cell.seed + index};
  if (!cell.seeded_solvable) return gen_system(cfg);
  PointVector x_star(cell.n);
  const std::uint64_t s = rng::splitmix64(cfg.seed ^ 0x5EEDED50511710Dull);
  for (std::size_t i = 0; i < cell.n; ++i) x_star[i] = rng::draw_uniform(s, i, -10.0, 10.0);
  return gen_seeded_solvable(cfg, x_star);
}

inline BenchReport run_bench(const BenchSuite& suite) {
  using clock = std::chrono::steady_clock;
  BenchReport report;
  for (const BenchCell& cell : suite.cells) {
    std::vector<std::string> methods = cell.methods;
    if (!cell.reference.empty() &&
        std::find(methods.begin(), methods.end(), cell.reference) == methods.end())
      methods.push_back(cell.reference);

    struct PerMethod {
      MethodAggregate agg;
      std::vector<double> times;
      std::vector<std::optional<IntervalVector>> boxes;
    };
    std::vector<PerMethod> rows(methods.size());
    for (std::size_t mi = 0; mi < methods.size(); ++mi) {
      rows[mi].agg.method = methods[mi];
      rows[mi].agg.population = cell.population;
    }

    for (std::size_t k = 0; k < cell.population; ++k) {
      const OilsSystem sys = make_bench_system(cell, k);
      for (std::size_t mi = 0; mi < methods.size(); ++mi) {
        const auto t0 = clock::now();
        const SolveOutcome out = run_bench_method(methods[mi], sys, suite.x0_bound);
        const auto t1 = clock::now();
        const double ns =
            static_cast<double>(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0)
                                    .count());
        rows[mi].times.push_back(ns);
        switch (out.kind) {
          case OutcomeKind::Enclosure: ++rows[mi].agg.enclosures; break;
          case OutcomeKind::Unsolvable: ++rows[mi].agg.unsolvable; break;
          case OutcomeKind::Unbounded: ++rows[mi].agg.unbounded; break;
          case OutcomeKind::Failure: ++rows[mi].agg.failures; break;
        }
        rows[mi].boxes.push_back(out.is_enclosure() ? std::optional<IntervalVector>(out.box)
                                                    : std::nullopt);
      }
    }

    const auto ref_it = std::find(methods.begin(), methods.end(), cell.reference);
    const std::size_t ref_idx =
        ref_it == methods.end() ? methods.size() : static_cast<std::size_t>(ref_it - methods.begin());
    for (std::size_t mi = 0; mi < methods.size(); ++mi) {
      PerMethod& row = rows[mi];
      double tsum = 0.0;
      for (double t : row.times) tsum += t;
      row.agg.mean_time_ns = row.times.empty() ? 0.0 : tsum / row.times.size();
      std::vector<double> sorted = row.times;
      std::sort(sorted.begin(), sorted.end());
      row.agg.median_time_ns = sorted.empty() ? 0.0 : sorted[sorted.size() / 2];
      if (ref_idx < methods.size()) {
        double rsum = 0.0;
        for (std::size_t k = 0; k < cell.population; ++k) {
          if (!row.boxes[k] || !rows[ref_idx].boxes[k]) continue;
          if (const auto r = ratio(*row.boxes[k], *rows[ref_idx].boxes[k])) {
            rsum += *r;
            ++row.agg.ratio_count;
          }
        }
        row.agg.mean_ratio = row.agg.ratio_count ? rsum / row.agg.ratio_count : 0.0;
      }
    }
    CellReport cr;
    cr.cell = cell;
    for (auto& row : rows) cr.methods.push_back(std::move(row.agg));
    report.cells.push_back(std::move(cr));
  }
  return report;
}

}  // namespace oils
