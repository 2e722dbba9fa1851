#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace mds {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored in compressed form with every neighbor list sorted
/// ascending, so two graphs with the same edge set compare equal and
/// serialize identically. Duplicate edges collapse on construction; self-loops
/// and out-of-range endpoints are rejected.
class Graph {
 public:
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const;
  std::size_t max_degree() const noexcept { return max_degree_; }
  bool has_edge(Vertex u, Vertex v) const;

  /// Vertices by descending degree, ties by ascending index.
  std::span<const Vertex> by_degree() const noexcept { return by_degree_; }

  /// Every edge once as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<Vertex> by_degree_;
  std::size_t max_degree_ = 0;
};

// Small named graphs used throughout tests and examples.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph complete_graph(std::size_t n);

bool is_connected(const Graph& g);

}  // namespace mds
