#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "mds/graph.hpp"
#include "mds/levy.hpp"
#include "mds/rng.hpp"
#include "mds/solution.hpp"

namespace mds {

struct HcsaParams {
  std::size_t population_size = 50;
  std::size_t max_generations = 500;
  double pa = 0.25;  // fraction of worst nests abandoned each generation
  LevyParams levy;
  std::uint64_t seed = 0;

  void validate() const;
  /// floor(pa * population_size)
  std::size_t abandon_count() const;
};

/// Nests; each member is dominating between generations.
using Population = std::vector<Solution>;

struct RunResult {
  Solution best_solution;
  std::size_t best_size = 0;
  /// best_size after generation 0 (initial population) and after each generation.
  std::vector<std::size_t> best_size_history;
  std::size_t generations_run = 0;
  std::size_t generation_of_best = 0;
  double wall_seconds = 0.0;
};

/// Called with (generation, population) after initialization and after every
/// generation. Generation 0 is the initial population.
using GenerationObserver = std::function<void(std::size_t, const Population&)>;

/// Each member: independent fair coin per bit, then repair and filter.
Population init_population(const Graph& g, const HcsaParams& p, Rng& rng);

/// (a[0..point) ++ b[point..n), b[0..point) ++ a[point..n)); 1 <= point <= n-1.
std::pair<Solution, Solution> one_point_crossover(const Solution& a, const Solution& b,
                                                  std::size_t point);

/// Crossover at `point`, repair and filter both children, keep the fitter
/// (child1 on ties).
Solution best_offspring_at(const Graph& g, const Solution& a, const Solution& b,
                           std::size_t point);

/// best_offspring_at with point uniform in [1, n-1]. On a single-vertex graph
/// there is no cut point and the result is repair_and_filter(a).
Solution best_offspring(const Graph& g, const Solution& a, const Solution& b, Rng& rng);

/// Indices of the abandon_count() lowest-fitness members; among equal
/// fitness the higher index goes first.
std::vector<std::size_t> worst_members(const Graph& g, const Population& pop,
                                       std::size_t count);

/// Replaces each of the worst members by a Levy perturbation of itself.
Population abandon_worst(const Graph& g, Population pop, const HcsaParams& p, Rng& rng);

/// One crossover pass: for each member i in index order, draw a partner
/// uniformly among the other members, breed best_offspring, and replace
/// member i when the child's fitness is at least as high.
Population crossover_step(const Graph& g, Population pop, Rng& rng);

/// The full hybrid cuckoo search. Random draws come from one mt19937_64
/// stream seeded with p.seed and are consumed in this order: initial
/// population bits; then per generation, for each member i, the partner
/// index and the crossover point; then the Levy draws of each abandoned nest
/// (magnitude normals, inversion length, inversion start).
RunResult run_hcsa(const Graph& g, const HcsaParams& p, const GenerationObserver& observer = {});

}  // namespace mds
