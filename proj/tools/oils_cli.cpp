// Command line front end: generate systems, run solvers, test membership,
// drive benchmark suites, and render reports.
//
// Exit codes: 0 enclosure/hull (and successful gen/member/bench/report),
// 2 unsolvable, 3 unbounded, 4 method failure, 1 usage or I/O error.

#include <CLI11.hpp>
#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include "oils/oils.hpp"

namespace {

int exit_code_for(const oils::SolveOutcome& out) {
  switch (out.kind) {
    case oils::OutcomeKind::Enclosure: return 0;
    case oils::OutcomeKind::Unsolvable: return 2;
    case oils::OutcomeKind::Unbounded: return 3;
    case oils::OutcomeKind::Failure: return 4;
  }
  return 1;
}

void emit(const oils::io::json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << '\n';
  else
    oils::io::write_json_file(out_path, j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"enclosures and hulls for overdetermined interval linear systems"};
  app.require_subcommand(1);

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "generate a random system as JSON");
  oils::GeneratorConfig gen_cfg;
  std::string gen_out;
  bool gen_solvable = false;
  gen->add_option("--m", gen_cfg.m, "rows")->required();
  gen->add_option("--n", gen_cfg.n, "columns")->required();
  gen->add_option("--maxradius-exponent", gen_cfg.maxradius_exponent,
                  "radii are uniform in [0, 10^e]")
      ->default_val(-3);
  gen->add_option("--midpoint-range", gen_cfg.midpoint_range, "midpoints uniform in [-r, r]")
      ->default_val(25.0);
  gen->add_option("--seed", gen_cfg.seed, "stream seed")->default_val(1);
  gen->add_flag("--solvable", gen_solvable,
                "embed a random solution so the system is solvable by construction");
  gen->add_option("--out", gen_out, "output file (default stdout)");

  // ---- solve ----
  auto* solve = app.add_subcommand("solve", "run one method on a system file");
  std::string method, solve_in, solve_out, x0_path, presolve_method = "none";
  std::size_t iterations = 10;
  std::uint64_t solve_seed = 1;
  std::optional<double> epsilon;
  std::size_t max_iterations = 20;
  solve
      ->add_option("--method", method,
                   "one of ge|gepre|jacobi|gs|rohn|rohn-iter|lsq|hull")
      ->required();
  solve->add_option("--in", solve_in, "system JSON file")->required();
  solve->add_option("--x0", x0_path, "starting box JSON for jacobi/gs ({\"lo\":[],\"hi\":[]})");
  solve->add_option("--iterations", iterations, "refinement rounds for rohn-iter")
      ->default_val(10);
  solve->add_option("--seed", solve_seed, "rng seed for rohn-iter draws")->default_val(1);
  solve->add_option("--epsilon", epsilon,
                    "stopping parameter (default 10^(maxradius_exponent-2) from meta)");
  solve->add_option("--max-iterations", max_iterations, "iteration cap")->default_val(20);
  solve->add_option("--presolve", presolve_method, "hull presolve: none|rohn|lsq")
      ->default_val("none");
  solve->add_option("--out", solve_out, "output file (default stdout)");

  // ---- member ----
  auto* member = app.add_subcommand("member", "Oettli-Prager membership of a point");
  std::string member_in, point_path;
  bool member_strict = false;
  member->add_option("--in", member_in, "system JSON file")->required();
  member->add_option("--x", point_path, "point JSON file (plain array)")->required();
  member->add_flag("--strict", member_strict, "use the conservative-false rounding mode");

  // ---- bench ----
  auto* bench = app.add_subcommand("bench", "run a benchmark suite");
  std::string suite_path, bench_out;
  bench->add_option("--suite", suite_path, "suite JSON file")->required();
  bench->add_option("--out", bench_out, "report JSON output file")->required();

  // ---- report ----
  auto* report = app.add_subcommand("report", "render a report as markdown or csv");
  std::string report_in, report_format = "md", report_out;
  report->add_option("--in", report_in, "report JSON file")->required();
  report->add_option("--format", report_format, "md or csv")->default_val("md");
  report->add_option("--out", report_out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      oils::OilsSystem sys;
      if (gen_solvable) {
        oils::PointVector x_star(gen_cfg.n);
        const std::uint64_t s = oils::rng::splitmix64(gen_cfg.seed ^ 0x5EEDED50511710Dull);
        for (std::size_t i = 0; i < gen_cfg.n; ++i)
          x_star[i] = oils::rng::draw_uniform(s, i, -10.0, 10.0);
        sys = oils::gen_seeded_solvable(gen_cfg, x_star);
      } else {
        sys = oils::gen_system(gen_cfg);
      }
      emit(oils::io::to_json(sys), gen_out);
      return 0;
    }

    if (*solve) {
      const oils::OilsSystem sys = oils::io::system_from_json(oils::io::read_json_file(solve_in));
      const oils::GeneratorConfig meta =
          sys.meta.value_or(oils::GeneratorConfig{sys.A.rows(), sys.A.cols()});
      const double eps = epsilon.value_or(meta.stopping_epsilon());
      const oils::IterationConfig it_cfg{eps, max_iterations};
      const oils::PointVector f(sys.A.cols(), eps);

      std::optional<oils::IntervalVector> x0;
      if (!x0_path.empty()) x0 = oils::io::box_from_json(oils::io::read_json_file(x0_path));

      const auto t0 = std::chrono::steady_clock::now();
      oils::SolveOutcome out = oils::SolveOutcome::failure(oils::FailureReason::None);
      if (method == "ge")
        out = oils::solve_ge(sys.A, sys.b, false);
      else if (method == "gepre")
        out = oils::solve_ge(sys.A, sys.b, true);
      else if (method == "jacobi" || method == "gs")
        out = oils::solve_iterative(sys.A, sys.b,
                                    method == "gs" ? oils::IterativeVariant::GaussSeidel
                                                   : oils::IterativeVariant::Jacobi,
                                    it_cfg, x0);
      else if (method == "rohn")
        out = oils::rohn_basic(sys.A, sys.b, f).outcome;
      else if (method == "rohn-iter")
        out = oils::rohn_iterative(sys.A, sys.b, f, iterations, solve_seed);
      else if (method == "lsq")
        out = oils::solve_lsq(sys.A, sys.b, it_cfg);
      else if (method == "hull") {
        oils::HullOptions opt;
        if (presolve_method == "rohn") {
          if (auto pre = oils::rohn_basic(sys.A, sys.b, f); pre.outcome.is_enclosure())
            opt.presolve = std::move(pre.outcome.box);
        } else if (presolve_method == "lsq") {
          if (auto pre = oils::solve_lsq(sys.A, sys.b, it_cfg); pre.is_enclosure())
            opt.presolve = std::move(pre.box);
        } else if (presolve_method != "none") {
          std::cerr << "unknown presolve: " << presolve_method << '\n';
          return 1;
        }
        out = oils::hull(sys.A, sys.b, opt);
      } else {
        std::cerr << "unknown method: " << method << '\n';
        return 1;
      }
      const auto t1 = std::chrono::steady_clock::now();
      out.stats.time_ns =
          std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
      emit(oils::io::to_json(out), solve_out);
      return exit_code_for(out);
    }

    if (*member) {
      const oils::OilsSystem sys = oils::io::system_from_json(oils::io::read_json_file(member_in));
      const oils::io::json jx = oils::io::read_json_file(point_path);
      oils::PointVector x;
      for (const auto& v : jx) x.push_back(oils::io::decode_bound(v));
      const bool is_member = oils::op_membership(
          sys.A, sys.b, x,
          member_strict ? oils::MembershipMode::Strict : oils::MembershipMode::Inclusive);
      std::cout << oils::io::json{{"member", is_member}}.dump() << '\n';
      return 0;
    }

    if (*bench) {
      const oils::BenchSuite suite = oils::io::suite_from_json(oils::io::read_json_file(suite_path));
      const oils::BenchReport rep = oils::run_bench(suite);
      oils::io::write_json_file(bench_out, oils::io::to_json(rep));
      return 0;
    }

    if (*report) {
      const oils::BenchReport rep = oils::io::report_from_json(oils::io::read_json_file(report_in));
      std::string text;
      if (report_format == "md")
        text = oils::io::report_markdown(rep);
      else if (report_format == "csv")
        text = oils::io::report_csv(rep);
      else {
        std::cerr << "unknown format: " << report_format << '\n';
        return 1;
      }
      if (report_out.empty())
        std::cout << text;
      else {
        std::ofstream f(report_out);
        if (!f) throw std::runtime_error("cannot write " + report_out);
        f << text;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
