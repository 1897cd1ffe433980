#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "oils/bench.hpp"
#include "oils/generator.hpp"
#include "oils/outcome.hpp"

// JSON wire formats. Finite bounds are plain JSON numbers (the serializer
// emits round-trip-exact shortest decimals); infinite bounds are the string
// literals "inf" / "-inf".
namespace oils::io {

using json = nlohmann::json;

inline json encode_bound(double x) {
  if (x == rnd::kInf) return json("inf");
  if (x == -rnd::kInf) return json("-inf");
  return json(x);
}

inline double decode_bound(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return rnd::kInf;
    if (s == "-inf") return -rnd::kInf;
    throw std::invalid_argument("bad bound literal: " + s);
  }
  return j.get<double>();
}

inline json to_json(const Interval& x) { return json::array({encode_bound(x.lo()), encode_bound(x.hi())}); }

inline Interval interval_from_json(const json& j) {
  return Interval(decode_bound(j.at(0)), decode_bound(j.at(1)));
}

// box as {"lo": [...], "hi": [...]}
inline json to_json(const IntervalVector& v) {
  json lo = json::array(), hi = json::array();
  for (const Interval& x : v) {
    lo.push_back(encode_bound(x.lo()));
    hi.push_back(encode_bound(x.hi()));
  }
  return json{{"lo", std::move(lo)}, {"hi", std::move(hi)}};
}

inline IntervalVector box_from_json(const json& j) {
  const json& lo = j.at("lo");
  const json& hi = j.at("hi");
  if (lo.size() != hi.size()) throw std::invalid_argument("box: lo/hi size mismatch");
  IntervalVector v;
  v.reserve(lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i)
    v.emplace_back(decode_bound(lo[i]), decode_bound(hi[i]));
  return v;
}

// matrix as {"lo": [[...]], "hi": [[...]]}
inline json to_json(const IntervalMatrix& m) {
  json lo = json::array(), hi = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json rlo = json::array(), rhi = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      rlo.push_back(encode_bound(m(i, j).lo()));
      rhi.push_back(encode_bound(m(i, j).hi()));
    }
    lo.push_back(std::move(rlo));
    hi.push_back(std::move(rhi));
  }
  return json{{"lo", std::move(lo)}, {"hi", std::move(hi)}};
}

inline IntervalMatrix matrix_from_json(const json& j) {
  const json& lo = j.at("lo");
  const json& hi = j.at("hi");
  const std::size_t rows = lo.size();
  const std::size_t cols = rows ? lo[0].size() : 0;
  IntervalMatrix m(rows, cols, Interval(0.0));
  for (std::size_t i = 0; i < rows; ++i) {
    if (lo[i].size() != cols || hi[i].size() != cols)
      throw std::invalid_argument("matrix: ragged rows");
    for (std::size_t jj = 0; jj < cols; ++jj)
      m(i, jj) = Interval(decode_bound(lo[i][jj]), decode_bound(hi[i][jj]));
  }
  return m;
}

inline json to_json(const GeneratorConfig& cfg) {
  return json{{"m", cfg.m},
              {"n", cfg.n},
              {"maxradius_exponent", cfg.maxradius_exponent},
              {"midpoint_range", cfg.midpoint_range}};
}

inline GeneratorConfig config_from_json(const json& j, std::uint64_t seed) {
  GeneratorConfig cfg;
  cfg.m = j.at("m").get<std::size_t>();
  cfg.n = j.at("n").get<std::size_t>();
  cfg.maxradius_exponent = j.at("maxradius_exponent").get<int>();
  cfg.midpoint_range = j.at("midpoint_range").get<double>();
  cfg.seed = seed;
  return cfg;
}

inline json to_json(const OilsSystem& sys) {
  json j{{"m", sys.A.rows()}, {"n", sys.A.cols()}, {"A", to_json(sys.A)}};
  j["b"] = to_json(sys.b);
  if (sys.meta) j["meta"] = json{{"seed", sys.meta->seed}, {"config", to_json(*sys.meta)}};
  return j;
}

inline OilsSystem system_from_json(const json& j) {
  OilsSystem sys;
  sys.A = matrix_from_json(j.at("A"));
  sys.b = box_from_json(j.at("b"));
  if (sys.A.rows() != j.at("m").get<std::size_t>() ||
      sys.A.cols() != j.at("n").get<std::size_t>() || sys.b.size() != sys.A.rows())
    throw std::invalid_argument("system: inconsistent shape fields");
  if (j.contains("meta"))
    sys.meta = config_from_json(j["meta"].at("config"), j["meta"].at("seed").get<std::uint64_t>());
  return sys;
}

inline json to_json(const SolveOutcome& out) {
  json j{{"kind", to_string(out.kind)},
         {"stats", json{{"iterations", out.stats.iterations}, {"time_ns", out.stats.time_ns}}}};
  if (out.kind == OutcomeKind::Enclosure) j["box"] = to_json(out.box);
  if (out.kind == OutcomeKind::Failure) j["reason"] = to_string(out.reason);
  return j;
}

inline json to_json(const BenchCell& cell) {
  return json{{"m", cell.m},
              {"n", cell.n},
              {"maxradius_exponent", cell.maxradius_exponent},
              {"midpoint_range", cell.midpoint_range},
              {"population", cell.population},
              {"seed", cell.seed},
              {"seeded_solvable", cell.seeded_solvable},
              {"methods", cell.methods},
              {"reference", cell.reference}};
}

inline BenchCell cell_from_json(const json& j) {
  BenchCell cell;
  cell.m = j.at("m").get<std::size_t>();
  cell.n = j.at("n").get<std::size_t>();
  cell.maxradius_exponent = j.at("maxradius_exponent").get<int>();
  cell.midpoint_range = j.value("midpoint_range", 25.0);
  cell.population = j.at("population").get<std::size_t>();
  cell.seed = j.value("seed", std::uint64_t{1});
  cell.seeded_solvable = j.value("seeded_solvable", false);
  cell.methods = j.at("methods").get<std::vector<std::string>>();
  cell.reference = j.value("reference", std::string{});
  return cell;
}

inline json to_json(const BenchSuite& suite) {
  json cells = json::array();
  for (const auto& c : suite.cells) cells.push_back(to_json(c));
  return json{{"x0_bound", suite.x0_bound}, {"cells", std::move(cells)}};
}

inline BenchSuite suite_from_json(const json& j) {
  BenchSuite suite;
  suite.x0_bound = j.value("x0_bound", 1e8);
  for (const auto& c : j.at("cells")) suite.cells.push_back(cell_from_json(c));
  return suite;
}

inline json to_json(const MethodAggregate& a) {
  return json{{"method", a.method},
              {"population", a.population},
              {"enclosures", a.enclosures},
              {"unsolvable", a.unsolvable},
              {"unbounded", a.unbounded},
              {"failures", a.failures},
              {"ratio_count", a.ratio_count},
              {"mean_ratio", a.mean_ratio},
              {"mean_time_ns", a.mean_time_ns},
              {"median_time_ns", a.median_time_ns}};
}

inline MethodAggregate aggregate_from_json(const json& j) {
  MethodAggregate a;
  a.method = j.at("method").get<std::string>();
  a.population = j.at("population").get<std::size_t>();
  a.enclosures = j.at("enclosures").get<std::size_t>();
  a.unsolvable = j.at("unsolvable").get<std::size_t>();
  a.unbounded = j.at("unbounded").get<std::size_t>();
  a.failures = j.at("failures").get<std::size_t>();
  a.ratio_count = j.at("ratio_count").get<std::size_t>();
  a.mean_ratio = j.at("mean_ratio").get<double>();
  a.mean_time_ns = j.at("mean_time_ns").get<double>();
  a.median_time_ns = j.at("median_time_ns").get<double>();
  return a;
}

inline json to_json(const BenchReport& report) {
  json cells = json::array();
  for (const auto& c : report.cells) {
    json methods = json::array();
    for (const auto& m : c.methods) methods.push_back(to_json(m));
    cells.push_back(json{{"cell", to_json(c.cell)}, {"methods", std::move(methods)}});
  }
  return json{{"cells", std::move(cells)}};
}

inline BenchReport report_from_json(const json& j) {
  BenchReport report;
  for (const auto& c : j.at("cells")) {
    CellReport cr;
    cr.cell = cell_from_json(c.at("cell"));
    for (const auto& m : c.at("methods")) cr.methods.push_back(aggregate_from_json(m));
    report.cells.push_back(std::move(cr));
  }
  return report;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

inline std::string report_csv(const BenchReport& report) {
  std::ostringstream os;
  os << "m,n,maxradius_exponent,midpoint_range,population,seed,method,"
        "enclosures,unsolvable,unbounded,failures,ratio_count,mean_ratio,"
        "mean_time_ms,median_time_ms\n";
  for (const auto& c : report.cells)
    for (const auto& a : c.methods)
      os << c.cell.m << ',' << c.cell.n << ',' << c.cell.maxradius_exponent << ','
         << c.cell.midpoint_range << ',' << c.cell.population << ',' << c.cell.seed << ','
         << a.method << ',' << a.enclosures << ',' << a.unsolvable << ',' << a.unbounded << ','
         << a.failures << ',' << a.ratio_count << ',' << a.mean_ratio << ','
         << a.mean_time_ns / 1e6 << ',' << a.median_time_ns / 1e6 << '\n';
  return os.str();
}

inline std::string report_markdown(const BenchReport& report) {
  std::ostringstream os;
  for (const auto& c : report.cells) {
    os << "## " << c.cell.m << "x" << c.cell.n << ", max radius 1e" << c.cell.maxradius_exponent
       << ", midpoints +-" << c.cell.midpoint_range << ", population " << c.cell.population
       << ", seed " << c.cell.seed << (c.cell.seeded_solvable ? ", seeded-solvable" : "") << "\n\n";
    os << "| method | enclosures | unsolvable | unbounded | failures | mean ratio";
    if (!c.cell.reference.empty()) os << " (vs " << c.cell.reference << ")";
    os << " | mean time (ms) | median time (ms) |\n";
    os << "|---|---|---|---|---|---|---|---|\n";
    for (const auto& a : c.methods) {
      os << "| " << a.method << " | " << a.enclosures << " | " << a.unsolvable << " | "
         << a.unbounded << " | " << a.failures << " | ";
      if (a.ratio_count)
        os << a.mean_ratio;
      else
        os << "-";
      os << " | " << a.mean_time_ns / 1e6 << " | " << a.median_time_ns / 1e6 << " |\n";
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace oils::io
