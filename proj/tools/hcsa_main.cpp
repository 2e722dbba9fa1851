// hcsa: minimum dominating set solver and benchmark harness.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mds/bench.hpp"
#include "mds/error.hpp"
#include "mds/exact.hpp"
#include "mds/generators.hpp"
#include "mds/graph_io.hpp"
#include "mds/greedy.hpp"
#include "mds/hcsa.hpp"
#include "mds/solution.hpp"
#include "mds/stats.hpp"

namespace {

using nlohmann::json;

mds::Graph read_graph(const std::string& path, const std::string& format) {
  if (format.empty()) return mds::load_graph(path);
  const auto f = mds::parse_graph_format(format);
  if (!f) throw mds::ValidationError("unknown graph format '" + format + "'");
  return mds::load_graph(path, *f);
}

void print_members(const mds::Solution& s) {
  const auto members = s.members();
  for (std::size_t i = 0; i < members.size(); ++i) std::cout << (i ? " " : "") << members[i];
  std::cout << '\n';
}

// Numeric table keyed by header name.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> cells;

  std::vector<double> column(const std::string& name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw mds::ValidationError("no column named '" + name + "'");
    const auto idx = static_cast<std::size_t>(it - header.begin());
    std::vector<double> out;
    for (const auto& row : cells) out.push_back(std::stod(row.at(idx)));
    return out;
  }
};

Table read_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mds::Error("cannot open " + path);
  Table t;
  std::string line;
  auto split = [](const std::string& l) {
    std::vector<std::string> f;
    std::stringstream ss(l);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    return f;
  };
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (t.header.empty()) {
      t.header = split(line);
    } else {
      t.cells.push_back(split(line));
    }
  }
  return t;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hybrid cuckoo search for minimum dominating sets"};
  app.require_subcommand(1);

  std::string config_path;
  std::uint64_t seed = 0;
  std::size_t threads = 0;
  std::string out_dir;
  std::string solve_format = "text";
  std::string bench_format = "csv";
  std::string gen_format = "edgelist";

  // solve
  auto* solve = app.add_subcommand("solve", "One HCSA run on one graph");
  std::string graph_path, graph_format;
  std::size_t population = 0, generations = 0;
  double pa = -1.0;
  solve->add_option("graph", graph_path, "Graph file")->required();
  solve->add_option("--input-format", graph_format, "dimacs or edgelist (default: by extension)");
  solve->add_option("--config", config_path, "Experiment config whose solver block is used");
  solve->add_option("--seed", seed, "RNG seed");
  solve->add_option("--population", population, "Population size");
  solve->add_option("--generations", generations, "Maximum generations");
  solve->add_option("--pa", pa, "Abandonment fraction");
  solve->add_option("--format", solve_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  // exact
  auto* exact = app.add_subcommand("exact", "Exact domination number by branch and bound");
  std::uint64_t budget = mds::kDefaultExactBudget;
  exact->add_option("graph", graph_path, "Graph file")->required();
  exact->add_option("--input-format", graph_format, "dimacs or edgelist");
  exact->add_option("--budget", budget, "Search-node budget");

  // greedy
  auto* greedy = app.add_subcommand("greedy", "Max-coverage greedy dominating set");
  greedy->add_option("graph", graph_path, "Graph file")->required();
  greedy->add_option("--input-format", graph_format, "dimacs or edgelist");

  // bench
  auto* bench = app.add_subcommand("bench", "Run a config-driven experiment suite");
  bench->add_option("--config", config_path, "Experiment config (JSON)")->required();
  auto* seed_opt = bench->add_option("--seed", seed, "Override the base seed");
  bench->add_option("--threads", threads, "Worker threads (also HCSA_THREADS)");
  bench->add_option("--out", out_dir, "Directory for report.csv and report.json");
  bench->add_option("--format", bench_format, "Report printed to stdout")->check(CLI::IsMember({"csv", "json"}));

  // generate
  auto* generate = app.add_subcommand("generate", "Emit a benchmark instance");
  std::string kind;
  std::size_t gen_n = 0, gen_d = 0, max_attempts = 1000;
  double area = 0, range = 0, prob = 0;
  std::string output;
  generate->add_option("kind", kind, "geometric or planted")->required()->check(CLI::IsMember({"geometric", "planted"}));
  generate->add_option("--n", gen_n, "Vertex count")->required();
  generate->add_option("--area", area, "Square side (geometric)");
  generate->add_option("--range", range, "Connection radius (geometric)");
  generate->add_option("--max-attempts", max_attempts, "Connectivity retries (geometric)");
  generate->add_option("--d", gen_d, "Planted domination number (planted)");
  generate->add_option("--p", prob, "Edge probability (planted)");
  generate->add_option("--seed", seed, "RNG seed");
  generate->add_option("-o,--output", output, "Output file (default stdout)");
  generate->add_option("--format", gen_format, "edgelist or dimacs")->check(CLI::IsMember({"edgelist", "dimacs"}));

  // stats
  auto* stats = app.add_subcommand("stats", "Wilcoxon and Friedman comparisons over a result CSV");
  std::string table_path, pair_spec, rank_spec;
  stats->add_option("input", table_path, "CSV with one column per algorithm")->required();
  stats->add_option("--pair", pair_spec, "A,B: sign summary and Wilcoxon of A against B");
  stats->add_option("--rank", rank_spec, "A,B,...: Friedman mean ranks and Holm-adjusted pairwise Wilcoxon");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*solve) {
      const auto g = read_graph(graph_path, graph_format);
      mds::HcsaParams p;
      if (!config_path.empty()) p = mds::bench::load_config(config_path).solver;
      if (solve->count("--seed")) p.seed = seed;
      if (population) p.population_size = population;
      if (solve->count("--generations")) p.max_generations = generations;
      if (pa >= 0.0) p.pa = pa;
      const auto r = mds::run_hcsa(g, p);
      if (solve_format == "json") {
        std::cout << mds::bench::run_result_to_json(r).dump(2) << '\n';
      } else {
        std::cout << "size " << r.best_size << "\nfound_at_generation " << r.generation_of_best
                  << "\nseconds " << r.wall_seconds << "\nmembers ";
        print_members(r.best_solution);
      }
    } else if (*exact) {
      const auto g = read_graph(graph_path, graph_format);
      const auto r = mds::exact_mds(g, budget);
      std::cout << "gamma " << r.gamma << "\nnodes " << r.nodes_explored << "\nmembers ";
      print_members(r.witness);
    } else if (*greedy) {
      const auto g = read_graph(graph_path, graph_format);
      const auto s = mds::greedy_mds(g);
      std::cout << "size " << s.count() << "\nmembers ";
      print_members(s);
    } else if (*bench) {
      auto cfg = mds::bench::load_config(config_path);
      if (seed_opt->count()) cfg.solver.seed = seed;
      if (threads) cfg.threads = threads;
      if (!out_dir.empty()) cfg.out_dir = out_dir;
      const auto report = mds::bench::run_experiment(cfg);
      if (!cfg.out_dir.empty()) mds::bench::write_reports(report, cfg);
      if (bench_format == "json") {
        std::cout << mds::bench::report_to_json(report, cfg).dump(2) << '\n';
      } else {
        std::cout << mds::bench::report_to_csv(report);
      }
      for (const auto& row : report.rows) {
        if (row.error) std::cerr << "instance " << row.name << ": " << *row.error << '\n';
      }
    } else if (*generate) {
      mds::Rng rng(seed);
      const auto fmt = gen_format == "dimacs" ? mds::GraphFormat::dimacs : mds::GraphFormat::edgelist;
      std::string text;
      if (kind == "geometric") {
        const mds::GeometricSpec spec{gen_n, area, range, max_attempts};
        const auto inst = mds::gen_geometric(spec, rng);
        text = mds::serialize_graph(inst.graph, fmt, mds::describe(spec, seed));
      } else {
        const mds::PlantedSpec spec{gen_n, gen_d, prob};
        const auto inst = mds::gen_planted(spec, rng);
        auto comments = mds::describe(spec, seed);
        std::string planted = "planted=";
        for (std::size_t i = 0; i < inst.dominators.size(); ++i) {
          planted += (i ? "," : "") + std::to_string(inst.dominators[i]);
        }
        comments.push_back(planted);
        text = mds::serialize_graph(inst.graph, fmt, comments);
      }
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream(output, std::ios::binary) << text;
      }
    } else if (*stats) {
      const auto table = read_table(table_path);
      if (pair_spec.empty() && rank_spec.empty()) {
        throw mds::ValidationError("stats needs --pair and/or --rank");
      }
      if (!pair_spec.empty()) {
        const auto cols = split_list(pair_spec);
        if (cols.size() != 2) throw mds::ValidationError("--pair takes exactly two columns");
        const auto s = mds::stats::PairedSamples::from_columns(table.column(cols[0]), table.column(cols[1]));
        const auto signs = mds::stats::sign_summary(s);
        std::cout << "a,b,greater,less,equal,n_used,w_greater,w_less,z,p\n";
        std::cout << cols[0] << ',' << cols[1] << ',' << signs.greater << ',' << signs.less << ','
                  << signs.equal << ',';
        try {
          const auto r = mds::stats::wilcoxon_signed_rank(s);
          char buf[160];
          std::snprintf(buf, sizeof buf, "%zu,%.1f,%.1f,%.3f,%.4g", r.n_used, r.w_greater, r.w_less,
                        r.z, r.p_value);
          std::cout << buf << '\n';
        } catch (const mds::DegenerateInput&) {
          std::cout << "0,0,0,0,1\n";
        }
      }
      if (!rank_spec.empty()) {
        const auto names = split_list(rank_spec);
        std::vector<std::vector<double>> rows(table.cells.size());
        for (const auto& name : names) {
          const auto col = table.column(name);
          for (std::size_t i = 0; i < col.size(); ++i) rows[i].push_back(col[i]);
        }
        const auto f = mds::stats::friedman_mean_ranks(rows);
        std::cout << "algorithm,mean_rank\n";
        for (std::size_t j = 0; j < names.size(); ++j) {
          char buf[64];
          std::snprintf(buf, sizeof buf, "%.4f", f.mean_ranks[j]);
          std::cout << names[j] << ',' << buf << '\n';
        }
        char buf[128];
        std::snprintf(buf, sizeof buf, "friedman_chi_square,%.4f\nfriedman_p,%.4g\n", f.chi_square,
                      f.p_value);
        std::cout << buf;
        std::cout << "first,second,z,p,p_holm\n";
        for (const auto& c : mds::stats::pairwise_wilcoxon(names, rows)) {
          std::snprintf(buf, sizeof buf, "%.3f,%.4g,%.4g", c.summary.z, c.summary.p_value, c.p_holm);
          std::cout << c.first << ',' << c.second << ',' << buf << '\n';
        }
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
