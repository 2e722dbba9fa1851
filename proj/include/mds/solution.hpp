#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mds/graph.hpp"

namespace mds {

/// 0-1 membership vector over the vertices of one graph; bit v set means v is
/// a dominator. Carries an optional fitness value that every mutator clears.
class Solution {
 public:
  Solution() = default;
  explicit Solution(std::size_t n) : bits_(n, 0) {}

  /// Parses a string of '0'/'1' characters, vertex 0 first.
  static Solution from_bits(std::string_view bits);
  static Solution from_members(std::size_t n, std::span<const Vertex> members);

  std::size_t dimension() const noexcept { return bits_.size(); }
  std::size_t count() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  bool test(Vertex v) const { return bits_.at(v) != 0; }
  void set(Vertex v);
  void reset(Vertex v);
  void flip(Vertex v);

  std::vector<Vertex> members() const;
  std::string to_bits() const;

  std::optional<std::int64_t> cached_fitness() const noexcept { return fitness_; }
  /// Only for callers that have just computed fitness(g, *this).
  void cache_fitness(std::int64_t value) noexcept { fitness_ = value; }

  friend bool operator==(const Solution& a, const Solution& b) { return a.bits_ == b.bits_; }
  friend std::strong_ordering operator<=>(const Solution& a, const Solution& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::vector<std::uint8_t> bits_;
  std::size_t count_ = 0;
  std::optional<std::int64_t> fitness_;
};

/// Throws ValidationError unless s was built for a graph of g's order.
void check_dimension(const Graph& g, const Solution& s);

/// {v} together with adj(v), ascending.
std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v);

/// Number of vertices in S or adjacent to a member of S.
std::size_t dominated_count(const Graph& g, const Solution& s);

bool is_dominating(const Graph& g, const Solution& s);

/// For every vertex, how many members of s lie in its closed neighborhood.
std::vector<std::uint32_t> cover_counts(const Graph& g, const Solution& s);

}  // namespace mds
