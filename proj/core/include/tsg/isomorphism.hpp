#pragma once

#include <optional>
#include <vector>

#include "tsg/graph.hpp"

namespace tsg {

// Exact isomorphism test by invariant-refined backtracking (degree and
// neighbor-color refinement, most-constrained-first matching). Returns a
// witness mapping m with m[v of g1] = vertex of g2 preserving adjacency both
// ways, or nullopt. Intended for desk scale (<= ~200 vertices).
std::optional<std::vector<int>> is_isomorphic(const Graph& g1, const Graph& g2);

}  // namespace tsg
