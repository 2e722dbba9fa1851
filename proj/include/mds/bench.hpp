#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "mds/generators.hpp"
#include "mds/graph.hpp"
#include "mds/graph_io.hpp"
#include "mds/hcsa.hpp"

namespace mds::bench {

struct FileSource {
  std::filesystem::path path;
  GraphFormat format = GraphFormat::edgelist;
};

struct GeometricSource {
  GeometricSpec spec;
  std::uint64_t seed = 0;
};

struct PlantedSource {
  PlantedSpec spec;
  std::uint64_t seed = 0;
};

struct InstanceSource {
  std::string name;
  std::variant<FileSource, GeometricSource, PlantedSource> source;
  std::optional<std::size_t> known_gamma;
};

enum class StdDev { sample, population };

struct ExperimentConfig {
  std::vector<InstanceSource> instances;
  std::size_t runs_per_instance = 10;
  HcsaParams solver;
  StdDev std_dev = StdDev::sample;
  std::size_t threads = 0;  // 0: HCSA_THREADS, else hardware concurrency
  bool record_time = true;  // false writes zero times, making reports byte-stable
  std::filesystem::path out_dir;

  void validate() const;
};

/// Parses the JSON config. Relative instance paths resolve against base_dir.
ExperimentConfig parse_config(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

/// Builds the graph for one source; planted sources also yield their
/// structural domination number.
struct ResolvedInstance {
  Graph graph;
  std::optional<std::size_t> known_gamma;
};
ResolvedInstance resolve_instance(const InstanceSource& src);

struct RunRecord {
  std::uint64_t seed = 0;
  std::size_t best_size = 0;
  std::vector<Vertex> best_members;
  std::size_t generation_of_best = 0;
  double seconds = 0.0;
  std::vector<std::size_t> history;
};

struct InstanceRow {
  std::string name;
  std::optional<std::string> error;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t best = 0;
  double avg = 0.0;
  double std = 0.0;
  std::size_t worst = 0;
  std::optional<std::size_t> known_gamma;
  std::optional<std::size_t> opt_reached;
  std::size_t runs = 0;
  double mean_seconds = 0.0;
  std::vector<RunRecord> run_detail;
};

struct BenchmarkReport {
  std::vector<InstanceRow> rows;
};

/// Aggregates per-run best sizes into best/avg/std/worst/opt_reached.
InstanceRow aggregate(std::string name, std::span<const RunRecord> runs,
                      std::optional<std::size_t> known_gamma, StdDev std_dev);

/// Runs every (instance, run) cell, seeds solver.seed + run index, and
/// aggregates in config order. Failures are recorded per instance.
BenchmarkReport run_experiment(const ExperimentConfig& cfg);

inline constexpr std::string_view kCsvHeader =
    "instance,best,avg,std,worst,opt_reached,runs,mean_seconds";

std::string report_to_csv(const BenchmarkReport& r);
/// Reads the summary columns back (per-run detail is JSON-only).
BenchmarkReport parse_report_csv(std::string_view csv);
nlohmann::json report_to_json(const BenchmarkReport& r, const ExperimentConfig& cfg);

nlohmann::json params_to_json(const HcsaParams& p);
HcsaParams params_from_json(const nlohmann::json& j, HcsaParams base = {});
nlohmann::json run_result_to_json(const RunResult& r);

/// Explicit value, else HCSA_THREADS, else hardware concurrency (min 1).
std::size_t resolve_threads(std::size_t requested);

/// Writes report.csv and report.json under cfg.out_dir.
void write_reports(const BenchmarkReport& r, const ExperimentConfig& cfg);

}  // namespace mds::bench
