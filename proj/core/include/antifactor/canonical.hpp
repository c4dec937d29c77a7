#pragma once

#include <string>

#include "antifactor/graph.hpp"

namespace antifactor {

// Canonical form of a bipartite graph up to isomorphisms that keep X on X and
// Y on Y. Rows are the smaller side; for each row order the columns are
// sorted and concatenated, and the smallest such string wins. Only row orders
// consistent with a vertex invariant (degree, then neighbour degrees) are
// tried, which keeps the minimum well defined. Two graphs share a form iff
// they are isomorphic. Throws ResourceError when more than
// `max_permutations` row orders would be needed.
std::string canonical_form(const BipartiteGraph& g, int max_permutations = 1'000'000);

}  // namespace antifactor
