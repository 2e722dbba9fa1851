#include "mds/hcsa.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "mds/error.hpp"
#include "mds/solution_ops.hpp"

namespace mds {

void HcsaParams::validate() const {
  if (population_size < 2) throw ValidationError("population size must be at least 2");
  if (!(pa >= 0.0 && pa <= 1.0)) throw ValidationError("pa must lie in [0, 1]");
  levy.validate();
}

std::size_t HcsaParams::abandon_count() const {
  return static_cast<std::size_t>(std::floor(pa * static_cast<double>(population_size)));
}

Population init_population(const Graph& g, const HcsaParams& p, Rng& rng) {
  p.validate();
  Population pop;
  pop.reserve(p.population_size);
  for (std::size_t i = 0; i < p.population_size; ++i) {
    Solution s(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
      if (coin(rng)) s.set(v);
    }
    pop.push_back(repair_and_filter(g, s));
  }
  return pop;
}

std::pair<Solution, Solution> one_point_crossover(const Solution& a, const Solution& b,
                                                  std::size_t point) {
  if (a.dimension() != b.dimension()) throw ValidationError("parents differ in dimension");
  const std::size_t n = a.dimension();
  if (point < 1 || point + 1 > n) {
    throw RangeError("crossover point " + std::to_string(point) + " outside [1, " +
                     std::to_string(n == 0 ? 0 : n - 1) + "]");
  }
  Solution first = a;
  Solution second = b;
  for (std::size_t v = point; v < n; ++v) {
    const auto vx = static_cast<Vertex>(v);
    if (a.test(vx) != b.test(vx)) {
      first.flip(vx);
      second.flip(vx);
    }
  }
  return {std::move(first), std::move(second)};
}

Solution best_offspring_at(const Graph& g, const Solution& a, const Solution& b,
                           std::size_t point) {
  auto [first, second] = one_point_crossover(a, b, point);
  Solution c1 = repair_and_filter(g, first);
  Solution c2 = repair_and_filter(g, second);
  return fitness(g, c2) > fitness(g, c1) ? c2 : c1;
}

Solution best_offspring(const Graph& g, const Solution& a, const Solution& b, Rng& rng) {
  check_dimension(g, a);
  check_dimension(g, b);
  if (g.order() < 2) return repair_and_filter(g, a);
  return best_offspring_at(g, a, b, uniform_index(rng, 1, g.order() - 1));
}

std::vector<std::size_t> worst_members(const Graph& g, const Population& pop,
                                       std::size_t count) {
  std::vector<std::size_t> idx(pop.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::int64_t> f(pop.size());
  for (std::size_t i = 0; i < pop.size(); ++i) f[i] = fitness(g, pop[i]);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return f[a] != f[b] ? f[a] < f[b] : a > b;
  });
  idx.resize(std::min(count, idx.size()));
  return idx;
}

Population abandon_worst(const Graph& g, Population pop, const HcsaParams& p, Rng& rng) {
  for (std::size_t i : worst_members(g, pop, p.abandon_count())) {
    pop[i] = levy_perturb(g, pop[i], p.levy, rng);
  }
  return pop;
}

Population crossover_step(const Graph& g, Population pop, Rng& rng) {
  const std::size_t n_pop = pop.size();
  if (n_pop < 2) throw ValidationError("crossover needs at least two members");
  for (std::size_t i = 0; i < n_pop; ++i) {
    std::size_t j = uniform_index(rng, 0, n_pop - 2);
    if (j >= i) ++j;
    Solution child = best_offspring(g, pop[i], pop[j], rng);
    if (fitness(g, child) >= fitness(g, pop[i])) pop[i] = std::move(child);
  }
  return pop;
}

namespace {

std::size_t fittest(const Graph& g, const Population& pop) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < pop.size(); ++i) {
    if (fitness(g, pop[i]) > fitness(g, pop[best])) best = i;
  }
  return best;
}

}  // namespace

RunResult run_hcsa(const Graph& g, const HcsaParams& p, const GenerationObserver& observer) {
  p.validate();
  const auto started = std::chrono::steady_clock::now();
  Rng rng(p.seed);

  Population pop = init_population(g, p, rng);
  RunResult result;
  result.best_solution = pop[fittest(g, pop)];
  result.best_size = result.best_solution.count();
  result.best_size_history.reserve(p.max_generations + 1);
  result.best_size_history.push_back(result.best_size);
  if (observer) observer(0, pop);

  for (std::size_t gen = 1; gen <= p.max_generations; ++gen) {
    pop = crossover_step(g, std::move(pop), rng);
    pop = abandon_worst(g, std::move(pop), p, rng);

    const std::size_t top = fittest(g, pop);
    if (fitness(g, pop[top]) > fitness(g, result.best_solution)) {
      result.best_solution = pop[top];
      result.best_size = result.best_solution.count();
      result.generation_of_best = gen;
    }
    result.best_size_history.push_back(result.best_size);
    if (observer) observer(gen, pop);
  }

  result.generations_run = p.max_generations;
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace mds
