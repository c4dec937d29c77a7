#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "antifactor/degree_spec.hpp"
#include "antifactor/general_graph.hpp"
#include "antifactor/graph.hpp"

// Seeded graph families. Every generator is a pure function of its arguments;
// randomness comes from std::mt19937_64 with hand-rolled sampling so streams
// are identical across standard libraries.
namespace antifactor::gen {

// Uniform integer in [0, bound). bound > 0.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
// Uniform double in [0, 1).
double uniform_unit(std::mt19937_64& rng);

// Union of k random permutations of [0, n); a permutation that repeats an
// edge is redrawn. InputError unless 1 <= k <= n; ResourceError after
// `retry_cap` redraws.
BipartiteGraph random_regular_bipartite(int n, int k, std::uint64_t seed, int retry_cap = 100'000);

// Even n >= 4: the walk x_0 y_0 x_1 y_1 ... back to x_0. InputError otherwise.
BipartiteGraph cycle(int n);

// Two branch vertices joined by internally disjoint paths of the given
// lengths (at least three paths, each of length >= 2). With all lengths even
// both branch vertices sit on `branch_side`; with all odd the first does and
// the second sits opposite. Mixed parity is rejected.
BipartiteGraph theta_graph(const std::vector<int>& path_lengths, Side branch_side);

// Connected graphs with |Y| = |X| + 1, every X-degree 3 and every Y-degree at
// most 3, for 1 <= |X| <= max_x, one per isomorphism class, ordered by |X|.
// ResourceError for max_x > 6.
std::vector<BipartiteGraph> enumerate_h_family(int max_x);

// Every connected bipartite graph with 1..max_edges edges, one per
// isomorphism class (X kept on X), ordered by edge count.
std::vector<BipartiteGraph> connected_bipartite_graphs(int max_edges);

// Each of the nx * ny pairs present independently with probability p.
BipartiteGraph random_bipartite(int nx, int ny, double p, std::uint64_t seed);

// Random allowed set per vertex: one to three members spaced by 1 or 2,
// starting anywhere in [-1, 2], with a tail half of the time.
DegreeSpec random_allowed_spec(const BipartiteGraph& g, std::uint64_t seed);

GeneralGraph erdos_renyi(int n, double p, std::uint64_t seed);

}  // namespace antifactor::gen
