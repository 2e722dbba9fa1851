#pragma once

// Shared helpers for tests: random instances and literal, unoptimized
// re-statements of the procedures under test.

#include <cstdint>
#include <string>
#include <vector>

#include "mds/graph.hpp"
#include "mds/rng.hpp"
#include "mds/solution.hpp"

namespace mds::testing {

inline Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (uniform_unit(rng) < p) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline Solution random_solution(std::size_t n, double density, Rng& rng) {
  Solution s(n);
  for (Vertex v = 0; v < n; ++v)
    if (uniform_unit(rng) < density) s.set(v);
  return s;
}

// Coverage counted straight from the definition via has_edge.
inline std::size_t naive_dominated(const Graph& g, const Solution& s) {
  std::size_t covered = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    bool hit = s.test(v);
    for (Vertex u = 0; u < g.order() && !hit; ++u) hit = s.test(u) && g.has_edge(u, v);
    covered += hit;
  }
  return covered;
}

inline std::int64_t naive_fitness(const Graph& g, const Solution& s) {
  const auto n = static_cast<std::int64_t>(g.order());
  return n * static_cast<std::int64_t>(naive_dominated(g, s)) - static_cast<std::int64_t>(s.count());
}

// Filtering exactly as written: clear, re-evaluate, keep only on strict gain.
inline Solution literal_filter(const Graph& g, Solution s) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!s.test(v)) continue;
    const auto before = naive_fitness(g, s);
    s.reset(v);
    if (!(naive_fitness(g, s) > before)) s.set(v);
  }
  return s;
}

// Reparation exactly as written: rescan for the max-degree uncovered vertex.
inline Solution literal_repair(const Graph& g, Solution s) {
  auto uncovered = [&](Vertex v) {
    if (s.test(v)) return false;
    for (Vertex u : g.neighbors(v))
      if (s.test(u)) return false;
    return true;
  };
  while (true) {
    bool found = false;
    Vertex pick = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (uncovered(v) && (!found || g.degree(v) > g.degree(pick))) {
        pick = v;
        found = true;
      }
    }
    if (!found) return s;
    s.set(pick);
  }
}

inline std::string fingerprint(std::vector<Solution> pop) {
  std::sort(pop.begin(), pop.end());
  std::string out;
  for (const auto& s : pop) out += s.to_bits() + ";";
  return out;
}

}  // namespace mds::testing
