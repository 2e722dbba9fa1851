#include "mds/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include "mds/error.hpp"

namespace mds::bench {

using nlohmann::json;

void ExperimentConfig::validate() const {
  if (runs_per_instance < 1) throw ValidationError("runs_per_instance must be at least 1");
  solver.validate();
  for (const auto& inst : instances) {
    if (const auto* f = std::get_if<FileSource>(&inst.source)) {
      if (!std::filesystem::exists(f->path)) {
        throw ValidationError("instance '" + inst.name + "': file " + f->path.string() +
                              " does not exist");
      }
    }
  }
}

json params_to_json(const HcsaParams& p) {
  return {{"population", p.population_size},
          {"max_generations", p.max_generations},
          {"pa", p.pa},
          {"seed", p.seed},
          {"levy",
           {{"lambda", p.levy.lambda},
            {"alpha", p.levy.alpha},
            {"m_intervals", p.levy.m_intervals},
            {"h_divisor", p.levy.h_divisor}}}};
}

HcsaParams params_from_json(const json& j, HcsaParams p) {
  p.population_size = j.value("population", p.population_size);
  p.max_generations = j.value("max_generations", p.max_generations);
  p.pa = j.value("pa", p.pa);
  p.seed = j.value("seed", p.seed);
  if (j.contains("levy")) {
    const auto& l = j.at("levy");
    p.levy.lambda = l.value("lambda", p.levy.lambda);
    p.levy.alpha = l.value("alpha", p.levy.alpha);
    p.levy.m_intervals = l.value("m_intervals", p.levy.m_intervals);
    p.levy.h_divisor = l.value("h_divisor", p.levy.h_divisor);
  }
  p.validate();
  return p;
}

ExperimentConfig parse_config(const json& j, const std::filesystem::path& base_dir) {
  ExperimentConfig cfg;
  cfg.runs_per_instance = j.value("runs_per_instance", cfg.runs_per_instance);
  if (j.contains("solver")) cfg.solver = params_from_json(j.at("solver"));
  const auto std_name = j.value("std", std::string("sample"));
  if (std_name == "sample") {
    cfg.std_dev = StdDev::sample;
  } else if (std_name == "population") {
    cfg.std_dev = StdDev::population;
  } else {
    throw ValidationError("std must be 'sample' or 'population'");
  }
  cfg.threads = j.value("threads", cfg.threads);
  cfg.record_time = j.value("record_time", cfg.record_time);
  if (j.contains("out_dir")) cfg.out_dir = base_dir / j.at("out_dir").get<std::string>();

  for (const auto& ji : j.value("instances", json::array())) {
    InstanceSource inst;
    inst.name = ji.at("name").get<std::string>();
    if (ji.contains("known_gamma") && !ji.at("known_gamma").is_null()) {
      inst.known_gamma = ji.at("known_gamma").get<std::size_t>();
    }
    if (ji.contains("file")) {
      FileSource f;
      f.path = base_dir / ji.at("file").get<std::string>();
      if (ji.contains("format")) {
        const auto fmt = parse_graph_format(ji.at("format").get<std::string>());
        if (!fmt) throw ValidationError("instance '" + inst.name + "': unknown format");
        f.format = *fmt;
      } else {
        f.format = format_from_path(f.path);
      }
      inst.source = f;
    } else {
      const auto kind = ji.at("generator").get<std::string>();
      const auto seed = ji.value("seed", std::uint64_t{0});
      if (kind == "geometric") {
        GeometricSpec s;
        s.n = ji.at("n").get<std::size_t>();
        s.area = ji.at("area").get<double>();
        s.range = ji.at("range").get<double>();
        s.max_attempts = ji.value("max_attempts", s.max_attempts);
        inst.source = GeometricSource{s, seed};
      } else if (kind == "planted") {
        PlantedSpec s;
        s.n = ji.at("n").get<std::size_t>();
        s.d = ji.at("d").get<std::size_t>();
        s.p = ji.at("p").get<double>();
        inst.source = PlantedSource{s, seed};
      } else {
        throw ValidationError("instance '" + inst.name + "': unknown generator '" + kind + "'");
      }
    }
    cfg.instances.push_back(std::move(inst));
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("config " + path.string() + ": " + e.what());
  }
  return parse_config(j, path.parent_path());
}

ResolvedInstance resolve_instance(const InstanceSource& src) {
  return std::visit(
      [&](const auto& s) -> ResolvedInstance {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FileSource>) {
          return {load_graph(s.path, s.format), src.known_gamma};
        } else if constexpr (std::is_same_v<T, GeometricSource>) {
          Rng rng(s.seed);
          return {gen_geometric(s.spec, rng).graph, src.known_gamma};
        } else {
          Rng rng(s.seed);
          // The planted set is a minimum dominating set by construction.
          return {gen_planted(s.spec, rng).graph, src.known_gamma.value_or(s.spec.d)};
        }
      },
      src.source);
}

InstanceRow aggregate(std::string name, std::span<const RunRecord> runs,
                      std::optional<std::size_t> known_gamma, StdDev std_dev) {
  InstanceRow row;
  row.name = std::move(name);
  row.known_gamma = known_gamma;
  row.runs = runs.size();
  if (runs.empty()) return row;
  row.best = runs.front().best_size;
  row.worst = runs.front().best_size;
  double sum = 0.0;
  double seconds = 0.0;
  for (const auto& r : runs) {
    row.best = std::min(row.best, r.best_size);
    row.worst = std::max(row.worst, r.best_size);
    sum += static_cast<double>(r.best_size);
    seconds += r.seconds;
  }
  const auto count = static_cast<double>(runs.size());
  row.avg = sum / count;
  row.mean_seconds = seconds / count;
  double ss = 0.0;
  for (const auto& r : runs) {
    const double d = static_cast<double>(r.best_size) - row.avg;
    ss += d * d;
  }
  if (runs.size() > 1) {
    row.std = std::sqrt(ss / (std_dev == StdDev::sample ? count - 1.0 : count));
  }
  if (known_gamma) {
    row.opt_reached = static_cast<std::size_t>(std::count_if(
        runs.begin(), runs.end(), [&](const RunRecord& r) { return r.best_size == *known_gamma; }));
  }
  row.run_detail.assign(runs.begin(), runs.end());
  return row;
}

std::size_t resolve_threads(std::size_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HCSA_THREADS")) {
    char* end = nullptr;
    const auto v = std::strtoul(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

BenchmarkReport run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::size_t n_inst = cfg.instances.size();
  const std::size_t runs = cfg.runs_per_instance;

  std::vector<std::optional<ResolvedInstance>> resolved(n_inst);
  std::vector<std::string> errors(n_inst);
  for (std::size_t i = 0; i < n_inst; ++i) {
    try {
      resolved[i] = resolve_instance(cfg.instances[i]);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }

  std::vector<RunRecord> cells(n_inst * runs);
  std::vector<std::string> cell_errors(n_inst * runs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next++; c < cells.size(); c = next++) {
      const std::size_t inst = c / runs;
      if (!resolved[inst]) continue;
      HcsaParams p = cfg.solver;
      p.seed = cfg.solver.seed + c % runs;
      try {
        const auto result = run_hcsa(resolved[inst]->graph, p);
        auto& rec = cells[c];
        rec.seed = p.seed;
        rec.best_size = result.best_size;
        rec.best_members = result.best_solution.members();
        rec.generation_of_best = result.generation_of_best;
        rec.seconds = cfg.record_time ? result.wall_seconds : 0.0;
        rec.history = result.best_size_history;
      } catch (const std::exception& e) {
        cell_errors[c] = e.what();
      }
    }
  };
  const std::size_t n_threads = std::min(resolve_threads(cfg.threads), std::max<std::size_t>(1, cells.size()));
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  BenchmarkReport report;
  for (std::size_t i = 0; i < n_inst; ++i) {
    const auto& src = cfg.instances[i];
    if (!resolved[i]) {
      InstanceRow row;
      row.name = src.name;
      row.error = errors[i];
      report.rows.push_back(std::move(row));
      continue;
    }
    const auto first = cells.begin() + static_cast<long>(i * runs);
    const auto failed = std::find_if(cell_errors.begin() + static_cast<long>(i * runs),
                                     cell_errors.begin() + static_cast<long>((i + 1) * runs),
                                     [](const std::string& e) { return !e.empty(); });
    InstanceRow row;
    if (failed != cell_errors.begin() + static_cast<long>((i + 1) * runs)) {
      row.name = src.name;
      row.error = *failed;
    } else {
      row = aggregate(src.name, std::span<const RunRecord>(&*first, runs),
                      resolved[i]->known_gamma, cfg.std_dev);
    }
    row.vertices = resolved[i]->graph.order();
    row.edges = resolved[i]->graph.edge_count();
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.emplace_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::string report_to_csv(const BenchmarkReport& r) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& row : r.rows) {
    out += row.name;
    if (row.error || row.runs == 0) {
      out += ",,,,,,0,\n";
      continue;
    }
    out += ',' + std::to_string(row.best) + ',' + fixed(row.avg, 2) + ',' + fixed(row.std, 2) +
           ',' + std::to_string(row.worst) + ',' +
           (row.opt_reached ? std::to_string(*row.opt_reached) : std::string()) + ',' +
           std::to_string(row.runs) + ',' + fixed(row.mean_seconds, 3) + '\n';
  }
  return out;
}

BenchmarkReport parse_report_csv(std::string_view csv) {
  BenchmarkReport r;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    auto end = csv.find('\n', pos);
    if (end == std::string_view::npos) end = csv.size();
    std::string_view line = csv.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line_no == 1) {
      if (line != kCsvHeader) throw ParseError(line_no, "unexpected report header");
      continue;
    }
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 8) throw ParseError(line_no, "expected 8 fields");
    InstanceRow row;
    row.name = f[0];
    try {
      row.runs = std::stoul(f[6]);
      if (row.runs > 0) {
        row.best = std::stoul(f[1]);
        row.avg = std::stod(f[2]);
        row.std = std::stod(f[3]);
        row.worst = std::stoul(f[4]);
        if (!f[5].empty()) row.opt_reached = std::stoul(f[5]);
        row.mean_seconds = std::stod(f[7]);
      }
    } catch (const std::logic_error&) {
      throw ParseError(line_no, "malformed numeric field");
    }
    r.rows.push_back(std::move(row));
  }
  return r;
}

json run_result_to_json(const RunResult& r) {
  return {{"best_size", r.best_size},
          {"best", r.best_solution.members()},
          {"best_bits", r.best_solution.to_bits()},
          {"generations_run", r.generations_run},
          {"generation_of_best", r.generation_of_best},
          {"wall_seconds", r.wall_seconds},
          {"history", r.best_size_history}};
}

json report_to_json(const BenchmarkReport& r, const ExperimentConfig& cfg) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json jr = {{"instance", row.name}, {"vertices", row.vertices}, {"edges", row.edges}};
    if (row.error) {
      jr["error"] = *row.error;
      rows.push_back(std::move(jr));
      continue;
    }
    jr["best"] = row.best;
    jr["avg"] = row.avg;
    jr["std"] = row.std;
    jr["worst"] = row.worst;
    jr["known_gamma"] = row.known_gamma ? json(*row.known_gamma) : json(nullptr);
    jr["opt_reached"] = row.opt_reached ? json(*row.opt_reached) : json(nullptr);
    jr["mean_seconds"] = row.mean_seconds;
    json runs = json::array();
    for (const auto& rec : row.run_detail) {
      runs.push_back({{"seed", rec.seed},
                      {"best_size", rec.best_size},
                      {"best", rec.best_members},
                      {"generation_of_best", rec.generation_of_best},
                      {"seconds", rec.seconds},
                      {"history", rec.history}});
    }
    jr["runs"] = std::move(runs);
    rows.push_back(std::move(jr));
  }
  return {{"solver", params_to_json(cfg.solver)},
          {"runs_per_instance", cfg.runs_per_instance},
          {"std", cfg.std_dev == StdDev::sample ? "sample" : "population"},
          {"instances", std::move(rows)}};
}

void write_reports(const BenchmarkReport& r, const ExperimentConfig& cfg) {
  const auto dir = cfg.out_dir.empty() ? std::filesystem::path(".") : cfg.out_dir;
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "report.csv", std::ios::binary) << report_to_csv(r);
  std::ofstream(dir / "report.json", std::ios::binary) << report_to_json(r, cfg).dump(2) << '\n';
}

}  // namespace mds::bench
