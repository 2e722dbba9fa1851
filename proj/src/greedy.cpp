#include "mds/greedy.hpp"

#include <vector>

namespace mds {

Solution greedy_mds(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<char> covered(n, 0);
  // gain[v] = uncovered vertices in N[v]
  std::vector<std::size_t> gain(n);
  for (Vertex v = 0; v < n; ++v) gain[v] = g.degree(v) + 1;

  Solution s(n);
  std::size_t uncovered = n;
  while (uncovered > 0) {
    Vertex pick = 0;
    for (Vertex v = 1; v < n; ++v) {
      if (gain[v] > gain[pick]) pick = v;
    }
    s.set(pick);
    auto cover = [&](Vertex u) {
      if (covered[u]) return;
      covered[u] = 1;
      --uncovered;
      --gain[u];
      for (Vertex w : g.neighbors(u)) --gain[w];
    };
    cover(pick);
    for (Vertex u : g.neighbors(pick)) cover(u);
  }
  return s;
}

}  // namespace mds
