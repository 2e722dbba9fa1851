#include "mds/generators.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "mds/error.hpp"

namespace mds {

void GeometricSpec::validate() const {
  if (n < 2) throw ValidationError("geometric graph needs n >= 2");
  if (!(area > 0.0)) throw ValidationError("area must be positive");
  if (!(range > 0.0)) throw ValidationError("range must be positive");
  if (max_attempts < 1) throw ValidationError("max_attempts must be at least 1");
}

GeometricInstance gen_geometric(const GeometricSpec& spec, Rng& rng) {
  spec.validate();
  const double r2 = spec.range * spec.range;
  std::vector<Point> pts(spec.n);
  for (std::size_t attempt = 1; attempt <= spec.max_attempts; ++attempt) {
    for (auto& pt : pts) {
      pt.x = uniform_unit(rng) * spec.area;
      pt.y = uniform_unit(rng) * spec.area;
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < spec.n; ++u) {
      for (Vertex v = u + 1; v < spec.n; ++v) {
        const double dx = pts[u].x - pts[v].x;
        const double dy = pts[u].y - pts[v].y;
        if (dx * dx + dy * dy <= r2) edges.emplace_back(u, v);
      }
    }
    Graph g(spec.n, edges);
    if (is_connected(g)) return {std::move(g), pts, attempt};
  }
  throw GenerationFailed(spec.max_attempts);
}

void PlantedSpec::validate() const {
  if (d < 1 || d > n) throw ValidationError("planted spec needs 1 <= d <= n");
  if (n - d < d) throw ValidationError("planted spec needs n - d >= d");
  if (!(p > 0.0 && p < 1.0)) throw ValidationError("edge probability must lie in (0, 1)");
}

PlantedInstance gen_planted(const PlantedSpec& spec, Rng& rng) {
  spec.validate();
  std::vector<Vertex> order(spec.n);
  std::iota(order.begin(), order.end(), Vertex{0});
  // Fisher-Yates with the portable index draw.
  for (std::size_t i = spec.n - 1; i > 0; --i) std::swap(order[i], order[uniform_index(rng, 0, i)]);

  std::vector<Vertex> dominators(order.begin(), order.begin() + static_cast<long>(spec.d));
  std::vector<Vertex> others(order.begin() + static_cast<long>(spec.d), order.end());

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < others.size(); ++i) {
    edges.emplace_back(dominators[i % spec.d], others[i]);
  }
  std::vector<Vertex> sorted_others = others;
  std::sort(sorted_others.begin(), sorted_others.end());
  for (std::size_t i = 0; i < sorted_others.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted_others.size(); ++j) {
      if (coin(rng, spec.p)) edges.emplace_back(sorted_others[i], sorted_others[j]);
    }
  }
  std::sort(dominators.begin(), dominators.end());
  return {Graph(spec.n, edges), std::move(dominators)};
}

namespace {

std::string fmt_double(double x) {
  // shortest text that reads back to the same double
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace

std::vector<std::string> describe(const GeometricSpec& spec, std::uint64_t seed) {
  return {"generator=geometric n=" + std::to_string(spec.n) + " area=" + fmt_double(spec.area) +
          " range=" + fmt_double(spec.range) + " max_attempts=" + std::to_string(spec.max_attempts),
          "seed=" + std::to_string(seed)};
}

std::vector<std::string> describe(const PlantedSpec& spec, std::uint64_t seed) {
  return {"generator=planted n=" + std::to_string(spec.n) + " d=" + std::to_string(spec.d) +
          " p=" + fmt_double(spec.p),
          "seed=" + std::to_string(seed)};
}

}  // namespace mds
