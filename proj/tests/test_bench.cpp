#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mds/bench.hpp"
#include "mds/error.hpp"

using namespace mds;
using namespace mds::bench;
using nlohmann::json;

namespace {

std::filesystem::path scratch_dir(const std::string& tag) {
  auto dir = std::filesystem::temp_directory_path() / ("mds_bench_" + tag);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

RunRecord run_of(std::size_t size) {
  RunRecord r;
  r.best_size = size;
  return r;
}

json small_config() {
  return json::parse(R"({
    "runs_per_instance": 3,
    "record_time": false,
    "threads": 2,
    "solver": {"population": 10, "max_generations": 20, "seed": 5},
    "instances": [
      {"name": "geo", "generator": "geometric", "n": 30, "area": 100, "range": 35, "seed": 1},
      {"name": "planted", "generator": "planted", "n": 30, "d": 4, "p": 0.3, "seed": 2}
    ]
  })");
}

}  // namespace

TEST_CASE("aggregate statistics") {
  const RunRecord one[] = {run_of(1)};
  auto row = aggregate("k1", one, 1, StdDev::sample);
  CHECK(row.best == 1);
  CHECK(row.worst == 1);
  CHECK(row.avg == 1.0);
  CHECK(row.std == 0.0);
  CHECK(row.opt_reached == 1);

  const RunRecord many[] = {run_of(4), run_of(6), run_of(5), run_of(5)};
  row = aggregate("x", many, std::nullopt, StdDev::sample);
  CHECK(row.best == 4);
  CHECK(row.worst == 6);
  CHECK(row.avg == doctest::Approx(5.0));
  CHECK(row.std == doctest::Approx(std::sqrt(2.0 / 3.0)));
  CHECK_FALSE(row.opt_reached.has_value());
  CHECK(aggregate("x", many, 5, StdDev::population).std == doctest::Approx(std::sqrt(0.5)));
  CHECK(aggregate("x", many, 5, StdDev::population).opt_reached == 2);
}

TEST_CASE("csv layout and round trip") {
  CHECK(report_to_csv({}) == std::string(kCsvHeader) + "\n");

  BenchmarkReport r;
  const RunRecord runs[] = {run_of(3), run_of(4)};
  r.rows.push_back(aggregate("a", runs, 3, StdDev::sample));
  r.rows.push_back(aggregate("b", runs, std::nullopt, StdDev::sample));
  InstanceRow bad;
  bad.name = "c";
  bad.error = "boom";
  r.rows.push_back(bad);
  const auto csv = report_to_csv(r);
  CHECK(csv == std::string(kCsvHeader) +
                   "\na,3,3.50,0.71,4,1,2,0.000\nb,3,3.50,0.71,4,,2,0.000\nc,,,,,,0,\n");

  const auto back = parse_report_csv(csv);
  REQUIRE(back.rows.size() == 3);
  CHECK(back.rows[0].best == 3);
  CHECK(back.rows[0].opt_reached == 1);
  CHECK_FALSE(back.rows[1].opt_reached.has_value());
  CHECK(back.rows[2].runs == 0);
  CHECK(report_to_csv(back) == csv);

  CHECK_THROWS_AS(parse_report_csv("nope\n"), ParseError);
  CHECK_THROWS_AS(parse_report_csv(std::string(kCsvHeader) + "\na,1\n"), ParseError);
}

TEST_CASE("K1 instance") {
  const auto dir = scratch_dir("k1");
  {
    std::ofstream(dir / "k1.txt") << "# n=1\n";
  }
  auto cfg = parse_config(json::parse(R"({"runs_per_instance": 4, "record_time": false,
    "solver": {"population": 5, "max_generations": 3},
    "instances": [{"name": "k1", "file": "k1.txt", "known_gamma": 1}]})"),
                          dir);
  const auto report = run_experiment(cfg);
  REQUIRE(report.rows.size() == 1);
  const auto& row = report.rows[0];
  CHECK_FALSE(row.error.has_value());
  CHECK(row.best == 1);
  CHECK(row.worst == 1);
  CHECK(row.avg == 1.0);
  CHECK(row.std == 0.0);
  CHECK(row.opt_reached == 4);
  CHECK(report_to_csv(report) == std::string(kCsvHeader) + "\nk1,1,1.00,0.00,1,4,4,0.000\n");
}

TEST_CASE("experiment is deterministic and well ordered") {
  const auto cfg = parse_config(small_config());
  const auto a = run_experiment(cfg);
  auto cfg1 = cfg;
  cfg1.threads = 1;
  const auto b = run_experiment(cfg1);
  CHECK(report_to_csv(a) == report_to_csv(b));
  REQUIRE(a.rows.size() == 2);
  CHECK(a.rows[0].name == "geo");
  CHECK(a.rows[1].known_gamma == 4);
  for (const auto& row : a.rows) {
    CHECK(row.runs == 3);
    CHECK(static_cast<double>(row.best) <= row.avg);
    CHECK(row.avg <= static_cast<double>(row.worst));
    REQUIRE(row.run_detail.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(row.run_detail[i].seed == 5 + i);
  }
  CHECK(a.rows[1].best >= 4);
  CHECK(report_to_json(a, cfg)["instances"].size() == 2);
}

TEST_CASE("per-instance failures do not abort the experiment") {
  const auto dir = scratch_dir("errors");
  {
    std::ofstream(dir / "bad.txt") << "0 x\n";
  }
  auto j = small_config();
  j["instances"].push_back({{"name", "bad"}, {"file", "bad.txt"}});
  j["instances"].push_back({{"name", "hopeless"}, {"generator", "geometric"}, {"n", 10},
                            {"area", 1000}, {"range", 0.001}, {"max_attempts", 3}, {"seed", 1}});
  const auto report = run_experiment(parse_config(j, dir));
  REQUIRE(report.rows.size() == 4);
  CHECK_FALSE(report.rows[0].error.has_value());
  CHECK(report.rows[2].error.has_value());
  CHECK(report.rows[3].error.has_value());
  const auto csv = report_to_csv(report);
  CHECK(csv.find("\nbad,,,,,,0,\n") != std::string::npos);
  CHECK(csv.find("\nhopeless,,,,,,0,\n") != std::string::npos);
}

TEST_CASE("write_reports emits csv and json") {
  const auto dir = scratch_dir("out");
  auto cfg = parse_config(small_config());
  cfg.out_dir = dir / "nested";
  const auto report = run_experiment(cfg);
  write_reports(report, cfg);
  std::ifstream csv(cfg.out_dir / "report.csv");
  std::stringstream ss;
  ss << csv.rdbuf();
  CHECK(ss.str() == report_to_csv(report));
  std::ifstream js(cfg.out_dir / "report.json");
  const auto parsed = json::parse(js);
  CHECK(parsed["solver"]["population"] == 10);
}

TEST_CASE("config parsing") {
  const auto cfg = parse_config(small_config());
  CHECK(cfg.runs_per_instance == 3);
  CHECK(cfg.solver.population_size == 10);
  CHECK(cfg.solver.max_generations == 20);
  CHECK(cfg.solver.pa == doctest::Approx(0.25));
  CHECK(cfg.solver.levy.lambda == doctest::Approx(1.5));
  CHECK_FALSE(cfg.record_time);
  CHECK(std::holds_alternative<PlantedSource>(cfg.instances[1].source));

  const auto p = params_from_json(params_to_json(cfg.solver));
  CHECK(p.population_size == 10);
  CHECK(p.seed == 5);

  auto j = small_config();
  j["std"] = "bogus";
  CHECK_THROWS_AS(parse_config(j), ValidationError);
  j = small_config();
  j["instances"][0]["generator"] = "lattice";
  CHECK_THROWS_AS(parse_config(j), ValidationError);
  j = small_config();
  j["solver"]["pa"] = 1.5;
  CHECK_THROWS_AS(parse_config(j), ValidationError);
  j = small_config();
  j["instances"].push_back({{"name", "missing"}, {"file", "/nonexistent/graph.txt"}});
  CHECK_THROWS_AS(parse_config(j).validate(), ValidationError);
}

TEST_CASE("thread count resolution") {
  CHECK(resolve_threads(3) == 3);
  ::setenv("HCSA_THREADS", "2", 1);
  CHECK(resolve_threads(0) == 2);
  ::setenv("HCSA_THREADS", "junk", 1);
  CHECK(resolve_threads(0) >= 1);
  ::unsetenv("HCSA_THREADS");
  CHECK(resolve_threads(0) >= 1);
}
