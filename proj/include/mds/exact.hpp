#pragma once

#include <cstddef>
#include <cstdint>

#include "mds/graph.hpp"
#include "mds/solution.hpp"

namespace mds {

struct ExactResult {
  std::size_t gamma = 0;
  Solution witness;
  std::uint64_t nodes_explored = 0;
};

inline constexpr std::uint64_t kDefaultExactBudget = 50'000'000;

/// Branch and bound for the domination number.
///
/// Each node picks the uncovered vertex with the fewest admissible dominators
/// and branches over them by include/exclude, best residual coverage first.
/// The incumbent starts from the filtered greedy set. Nodes are pruned with
/// the larger of ceil(uncovered / best coverage) and a greedy packing of
/// uncovered vertices whose admissible dominators are pairwise disjoint.
/// Throws BudgetExceeded once more than `budget` nodes have been expanded.
ExactResult exact_mds(const Graph& g, std::uint64_t budget = kDefaultExactBudget);

inline constexpr std::size_t kBruteForceMaxOrder = 25;

/// Tries every subset in order of increasing size; n <= 25.
ExactResult brute_force_mds(const Graph& g);

}  // namespace mds
