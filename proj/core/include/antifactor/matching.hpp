#pragma once

#include <optional>
#include <vector>

#include "antifactor/factor.hpp"
#include "antifactor/graph.hpp"

namespace antifactor {

// Maximum matching by Hopcroft-Karp. Returns mate[x] (a Y index or -1).
// Searches scan vertices and neighbours in index order, so the lowest-index
// augmenting path is always taken first and results are reproducible.
std::vector<int> maximum_matching(const BipartiteGraph& g);

// A matching saturating both sides, or nullopt.
std::optional<Assignment> perfect_matching(const BipartiteGraph& g);

// Spanning r-regular subgraph of a k-regular graph (k >= r >= 1), built as
// the union of r perfect matchings peeled off one after another. Removing a
// perfect matching keeps the remainder regular, so every round succeeds.
BipartiteGraph extract_regular_factor(const BipartiteGraph& g, int r);

}  // namespace antifactor
