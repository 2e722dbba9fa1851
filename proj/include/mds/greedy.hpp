#pragma once

#include "mds/graph.hpp"
#include "mds/solution.hpp"

namespace mds {

/// Set-cover greedy: repeatedly take the vertex whose closed neighborhood
/// holds the most still-uncovered vertices (ties to the lowest index).
Solution greedy_mds(const Graph& g);

}  // namespace mds
