#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mds/graph.hpp"
#include "mds/rng.hpp"

namespace mds {

struct GeometricSpec {
  std::size_t n = 0;
  double area = 0.0;   // side length of the square
  double range = 0.0;  // connection radius
  std::size_t max_attempts = 1000;

  void validate() const;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct GeometricInstance {
  Graph graph;
  std::vector<Point> points;
  std::size_t attempts = 0;
};

/// Uniform placement in [0, area]^2, edge iff squared distance <= range^2.
/// Whole placements are redrawn until the graph is connected; throws
/// GenerationFailed after max_attempts.
GeometricInstance gen_geometric(const GeometricSpec& spec, Rng& rng);

struct PlantedSpec {
  std::size_t n = 0;
  std::size_t d = 0;  // planted domination number
  double p = 0.0;     // edge probability among non-dominators

  void validate() const;
};

struct PlantedInstance {
  Graph graph;
  std::vector<Vertex> dominators;  // ascending
};

/// Graph built around a hidden dominating set D of size d.
///
/// D is a uniformly random d-subset. The other vertices are shuffled and dealt
/// round-robin into d cells (sizes differ by at most one); each dominator is
/// joined to all of its cell. Pairs of non-dominators are joined with
/// probability p. Nothing else is joined, so every vertex has at most one
/// member of D in its closed neighborhood and no set smaller than d dominates.
PlantedInstance gen_planted(const PlantedSpec& spec, Rng& rng);

/// Comment lines recording how an instance was produced.
std::vector<std::string> describe(const GeometricSpec& spec, std::uint64_t seed);
std::vector<std::string> describe(const PlantedSpec& spec, std::uint64_t seed);

}  // namespace mds
