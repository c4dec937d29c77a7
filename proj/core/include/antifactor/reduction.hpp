#pragma once

#include <optional>
#include <string>
#include <vector>

#include "antifactor/factor.hpp"
#include "antifactor/general_graph.hpp"
#include "antifactor/graph.hpp"
#include "antifactor/solver.hpp"

// Covers of a graph by vertex-disjoint edges and triangles, and the incidence
// bipartite graph whose 1-anti-factors correspond to them.
namespace antifactor::reduction {

// Sorted vertex list of size 2 (edge) or 3 (triangle).
using CoverObject = std::vector<int>;

struct PackingCover {
  std::vector<CoverObject> objects;

  friend bool operator==(const PackingCover&, const PackingCover&) = default;
};

struct Incidence {
  BipartiteGraph graph;              // X = vertices of G0, Y = objects
  std::vector<CoverObject> objects;  // Y index -> vertex set
};

// Objects are the edges of G0 in edge order followed by its triangles in
// lexicographic order of their sorted vertex triples.
Incidence build_incidence(const GeneralGraph& g0);

// An object whose load equals its size is emitted as is; a triangle with
// load 2 becomes the edge between its two choosers. Throws InputError if f
// is not an anti-factor of the incidence graph.
PackingCover cover_from_antifactor(const GeneralGraph& g0, const Incidence& inc, const Assignment& f);

// Every vertex chooses the object that covers it. InputError if the cover
// uses an object missing from the table.
Assignment antifactor_from_cover(const Incidence& inc, const PackingCover& cover);

// Objects exist in G0, are pairwise disjoint, and cover every vertex.
bool is_valid_cover(const GeneralGraph& g0, const PackingCover& cover);

struct PackResult {
  std::optional<PackingCover> cover;
  solver::SolveOutcome outcome;
};

// Solves the incidence graph; ResourceError when the solver budget runs out.
PackResult pack_edges_triangles(const GeneralGraph& g0, const solver::Options& options = {});

// Exhaustive search branching on the lowest uncovered vertex. ResourceError
// above `vertex_cap` vertices.
std::optional<PackingCover> brute_force_cover(const GeneralGraph& g0, int vertex_cap = 12);

// One line per object: "E u v" or "T u v w", 1-based.
std::string write_cover(const PackingCover& cover);

}  // namespace antifactor::reduction
