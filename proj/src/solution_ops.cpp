#include "mds/solution_ops.hpp"

#include <algorithm>

namespace mds {
namespace {

std::int64_t score(std::size_t n, std::size_t covered, std::size_t size) {
  return static_cast<std::int64_t>(n) * static_cast<std::int64_t>(covered) -
         static_cast<std::int64_t>(size);
}

std::size_t covered_of(const std::vector<std::uint32_t>& cover) {
  return static_cast<std::size_t>(
      std::count_if(cover.begin(), cover.end(), [](std::uint32_t c) { return c > 0; }));
}

}  // namespace

std::int64_t fitness(const Graph& g, const Solution& s) {
  check_dimension(g, s);
  if (const auto cached = s.cached_fitness()) return *cached;
  return score(g.order(), dominated_count(g, s), s.count());
}

Solution filter(const Graph& g, const Solution& s) {
  auto cover = cover_counts(g, s);
  const std::size_t covered = covered_of(cover);
  Solution out = s;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!out.test(v)) continue;
    // Dropping v changes fitness by 1 - n * (vertices left uncovered).
    bool sole_cover = cover[v] == 1;
    for (Vertex u : g.neighbors(v)) {
      if (sole_cover) break;
      sole_cover = cover[u] == 1;
    }
    if (sole_cover) continue;
    out.reset(v);
    --cover[v];
    for (Vertex u : g.neighbors(v)) --cover[u];
  }
  out.cache_fitness(score(g.order(), covered, out.count()));
  return out;
}

Solution repair(const Graph& g, const Solution& s) {
  auto cover = cover_counts(g, s);
  Solution out = s;
  // Vertices only ever become covered, so one pass over the degree order
  // visits candidates in exactly the order repeated max-degree selection would.
  for (Vertex v : g.by_degree()) {
    if (cover[v] != 0) continue;
    out.set(v);
    ++cover[v];
    for (Vertex u : g.neighbors(v)) ++cover[u];
  }
  out.cache_fitness(score(g.order(), g.order(), out.count()));
  return out;
}

Solution repair_and_filter(const Graph& g, const Solution& s) {
  return filter(g, repair(g, s));
}

}  // namespace mds
