#include <doctest.h>

#include "mds/greedy.hpp"
#include "test_support.hpp"

using namespace mds;

namespace {

// Recount uncovered coverage from scratch at every step.
Solution literal_greedy(const Graph& g) {
  Solution s(g.order());
  while (!is_dominating(g, s)) {
    const auto cover = cover_counts(g, s);
    Vertex pick = 0;
    std::size_t best = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      std::size_t gain = cover[v] == 0;
      for (Vertex u : g.neighbors(v)) gain += cover[u] == 0;
      if (gain > best) {
        best = gain;
        pick = v;
      }
    }
    s.set(pick);
  }
  return s;
}

}  // namespace

TEST_CASE("greedy on named graphs") {
  CHECK(greedy_mds(star_graph(9)).members() == std::vector<Vertex>{0});
  CHECK(greedy_mds(path_graph(3)).members() == std::vector<Vertex>{1});
  CHECK(literal_greedy(cycle_graph(5)).members() == std::vector<Vertex>{0, 2});
  CHECK(greedy_mds(cycle_graph(5)).members() == std::vector<Vertex>{0, 2});
  CHECK(greedy_mds(path_graph(1)).count() == 1);
}

TEST_CASE("greedy matches the literal rule and always dominates") {
  Rng rng(55);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + uniform_index(rng, 0, 39);
    const auto g = testing::random_graph(n, uniform_unit(rng) * 0.4, rng);
    const auto s = greedy_mds(g);
    CHECK(is_dominating(g, s));
    CHECK(s.count() <= n);
    CHECK(s == literal_greedy(g));
  }
}
