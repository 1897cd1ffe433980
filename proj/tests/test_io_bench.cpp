#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "oils/bench.hpp"
#include "oils/io.hpp"
#include "support/test_rng.hpp"

using oils::BenchCell;
using oils::BenchReport;
using oils::BenchSuite;
using oils::GeneratorConfig;
using oils::Interval;
using oils::IntervalVector;

TEST_CASE("ratio is the mean of width quotients") {
  const IntervalVector x{Interval(0, 2), Interval(0, 4)};
  const IntervalVector t{Interval(0, 1), Interval(0, 2)};
  CHECK(*oils::ratio(x, x) == 1.0);
  CHECK(*oils::ratio(x, t) == 2.0);
  CHECK_FALSE(oils::ratio(x, {Interval(1.0), Interval(0, 1)}).has_value());  // degenerate
  CHECK_FALSE(oils::ratio(x, {Interval(0, 1)}).has_value());                 // shape mismatch
}

TEST_CASE("generator determinism and ranges") {
  const GeneratorConfig cfg{7, 4, -3, 25.0, 99};
  const auto a = oils::gen_system(cfg);
  const auto b = oils::gen_system(cfg);
  for (std::size_t i = 0; i < a.A.data().size(); ++i) CHECK(a.A.data()[i] == b.A.data()[i]);
  for (std::size_t i = 0; i < a.b.size(); ++i) CHECK(a.b[i] == b.b[i]);
  for (const Interval& x : a.A.data()) {
    CHECK(std::fabs(x.mid()) <= 25.0 * (1 + 1e-12));
    CHECK(x.rad() <= 1e-3 * (1 + 1e-9));
  }
  GeneratorConfig other = cfg;
  other.seed = 100;
  const auto c = oils::gen_system(other);
  CHECK(c.A(0, 0) != a.A(0, 0));
}

TEST_CASE("seeded systems carry their witness") {
  testrng::Rng rng(71);
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const GeneratorConfig cfg{6, 3, seed % 2 ? -3 : -8, 25.0, seed};
    oils::PointVector x_star(3);
    for (auto& v : x_star) v = rng.uniform(-10.0, 10.0);
    const auto sys = oils::gen_seeded_solvable(cfg, x_star);
    CHECK(oils::op_membership(sys.A, sys.b, x_star));
  }
}

TEST_CASE("interval JSON round trip, including infinities") {
  const Interval cases[] = {Interval(0.1, 0.30000000000000004), Interval(-3, 7),
                            Interval(1.0, oils::rnd::kInf),
                            Interval(-oils::rnd::kInf, oils::rnd::kInf)};
  for (const Interval& x : cases) {
    const auto j = oils::io::to_json(x);
    const std::string text = j.dump();
    const Interval back = oils::io::interval_from_json(oils::io::json::parse(text));
    CHECK(back == x);
  }
  CHECK(oils::io::to_json(Interval(1.0, oils::rnd::kInf)).dump() == "[1.0,\"inf\"]");
}

TEST_CASE("system JSON round trip is bitwise exact") {
  const GeneratorConfig cfg{5, 3, -3, 25.0, 1234};
  const auto sys = oils::gen_system(cfg);
  const auto text = oils::io::to_json(sys).dump();
  const auto back = oils::io::system_from_json(oils::io::json::parse(text));
  REQUIRE(back.A.rows() == sys.A.rows());
  for (std::size_t i = 0; i < sys.A.data().size(); ++i)
    CHECK(back.A.data()[i] == sys.A.data()[i]);
  for (std::size_t i = 0; i < sys.b.size(); ++i) CHECK(back.b[i] == sys.b[i]);
  REQUIRE(back.meta.has_value());
  CHECK(back.meta->seed == 1234);
  CHECK(back.meta->maxradius_exponent == -3);
}

TEST_CASE("outcome JSON carries kind, box, and reason") {
  oils::SolveOutcome enc = oils::SolveOutcome::enclosure({Interval(1, 2)});
  enc.stats.iterations = 7;
  const auto je = oils::io::to_json(enc);
  CHECK(je.at("kind") == "enclosure");
  CHECK(je.at("stats").at("iterations") == 7);
  CHECK(oils::io::box_from_json(je.at("box"))[0] == Interval(1, 2));

  const auto jf =
      oils::io::to_json(oils::SolveOutcome::failure(oils::FailureReason::ZeroOnDiagonal));
  CHECK(jf.at("kind") == "failure");
  CHECK(jf.at("reason") == "zero on diagonal");
  CHECK_FALSE(jf.contains("box"));
}

TEST_CASE("bench runs a small suite deterministically") {
  BenchSuite suite;
  BenchCell cell;
  cell.m = 5;
  cell.n = 3;
  cell.maxradius_exponent = -3;
  cell.population = 8;
  cell.seed = 11;
  cell.seeded_solvable = true;
  cell.methods = {"ge", "gepre", "gs", "rohn", "rohn-iter:5", "lsq"};
  cell.reference = "hull";
  suite.cells.push_back(cell);

  const BenchReport r1 = oils::run_bench(suite);
  const BenchReport r2 = oils::run_bench(suite);
  REQUIRE(r1.cells.size() == 1);
  REQUIRE(r1.cells[0].methods.size() == 7);  // reference appended
  for (std::size_t mi = 0; mi < r1.cells[0].methods.size(); ++mi) {
    const auto& a1 = r1.cells[0].methods[mi];
    const auto& a2 = r2.cells[0].methods[mi];
    CHECK(a1.method == a2.method);
    CHECK(a1.enclosures == a2.enclosures);
    CHECK(a1.unsolvable == a2.unsolvable);
    CHECK(a1.unbounded == a2.unbounded);
    CHECK(a1.failures == a2.failures);
    CHECK(a1.ratio_count == a2.ratio_count);
    CHECK(a1.mean_ratio == a2.mean_ratio);  // identical modulo wall times
    CHECK(a1.enclosures + a1.unsolvable + a1.unbounded + a1.failures == cell.population);
  }

  // rigorous methods are never tighter than the hull
  for (const auto& a : r1.cells[0].methods) {
    if (a.method == "hull" || a.ratio_count == 0) continue;
    CHECK(a.mean_ratio >= 1.0 - 1e-9);
  }

  // report serialization round trip
  const auto jr = oils::io::to_json(r1);
  const BenchReport back = oils::io::report_from_json(jr);
  CHECK(back.cells[0].methods[0].enclosures == r1.cells[0].methods[0].enclosures);
  CHECK(oils::io::report_markdown(back).find("| method |") != std::string::npos);
  CHECK(oils::io::report_csv(back).find("mean_ratio") != std::string::npos);
}

TEST_CASE("bench aggregates failures instead of raising") {
  BenchSuite suite;
  BenchCell cell;
  cell.m = 5;
  cell.n = 3;
  cell.maxradius_exponent = -1;  // jacobi/gs fail often here
  cell.population = 20;
  cell.seed = 3;
  cell.methods = {"jacobi", "rohn"};
  suite.cells.push_back(cell);
  const BenchReport r = oils::run_bench(suite);
  for (const auto& a : r.cells[0].methods)
    CHECK(a.enclosures + a.unsolvable + a.unbounded + a.failures == cell.population);
}
