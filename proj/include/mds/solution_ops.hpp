#pragma once

#include <cstdint>

#include "mds/graph.hpp"
#include "mds/solution.hpp"

namespace mds {

/// n * |N[S]| - |S|, to be maximized. Any dominating set scores above any
/// non-dominating one, and over dominating sets the value is n^2 - |S|.
std::int64_t fitness(const Graph& g, const Solution& s);

/// Redundancy removal. Visits members in ascending vertex order and drops a
/// member whenever doing so strictly raises fitness, which happens exactly
/// when every vertex of its closed neighborhood stays covered.
Solution filter(const Graph& g, const Solution& s);

/// Adds the uncovered vertex of largest degree (ties to the lowest index)
/// until the set dominates. Degree is taken in the full graph.
Solution repair(const Graph& g, const Solution& s);

/// filter(repair(s)); the canonical way new solutions enter a population.
Solution repair_and_filter(const Graph& g, const Solution& s);

}  // namespace mds
