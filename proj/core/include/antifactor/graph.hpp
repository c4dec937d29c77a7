#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace antifactor {

enum class Side : std::uint8_t { X, Y };

constexpr Side opposite(Side s) { return s == Side::X ? Side::Y : Side::X; }

struct Vertex {
  Side side = Side::X;
  int index = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline Vertex x_vertex(int i) { return {Side::X, i}; }
inline Vertex y_vertex(int i) { return {Side::Y, i}; }

struct Edge {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple bipartite graph with a fixed (X, Y) partition.
//
// Edge identity is the position in the construction-order edge list; subgraph
// bitmaps and the oracle's enumeration index edges by it. Adjacency lists are
// sorted by neighbour index, and the incident-edge lists are aligned with
// them. Vertices also have a flat index: X vertices first, then Y.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  // Throws InputError on a duplicate edge or an out-of-range index.
  BipartiteGraph(int x_count, int y_count, std::vector<Edge> edges);

  int x_count() const { return x_count_; }
  int y_count() const { return y_count_; }
  int side_count(Side s) const { return s == Side::X ? x_count_ : y_count_; }
  int vertex_count() const { return x_count_ + y_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }

  std::span<const int> neighbors(Vertex v) const;
  std::span<const int> incident_edges(Vertex v) const;
  std::span<const int> x_neighbors(int x) const { return neighbors(x_vertex(x)); }
  std::span<const int> y_neighbors(int y) const { return neighbors(y_vertex(y)); }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool adjacent(int x, int y) const { return edge_id(x, y).has_value(); }
  std::optional<int> edge_id(int x, int y) const;

  int flat(Vertex v) const { return v.side == Side::X ? v.index : x_count_ + v.index; }
  Vertex vertex(int flat) const {
    return flat < x_count_ ? x_vertex(flat) : y_vertex(flat - x_count_);
  }

  // Common degree if every vertex has the same degree; nullopt otherwise or
  // for the graph with no vertices.
  std::optional<int> regular_degree() const;
  bool is_connected() const;

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.x_count_ == b.x_count_ && a.y_count_ == b.y_count_ && a.edges_ == b.edges_;
  }

 private:
  struct Csr {
    std::vector<int> offsets;
    std::vector<int> neighbors;
    std::vector<int> edge_ids;
  };

  const Csr& csr(Side s) const { return s == Side::X ? x_adj_ : y_adj_; }

  int x_count_ = 0;
  int y_count_ = 0;
  std::vector<Edge> edges_;
  Csr x_adj_{{0}, {}, {}};
  Csr y_adj_{{0}, {}, {}};
};

// Subgraph on a vertex subset, with maps from new indices back to the parent.
// Edges keep their relative construction order.
struct InducedSubgraph {
  BipartiteGraph graph;
  std::vector<int> x_origin;
  std::vector<int> y_origin;
  std::vector<int> edge_origin;

  Vertex origin(Vertex v) const {
    return v.side == Side::X ? x_vertex(x_origin[static_cast<std::size_t>(v.index)])
                             : y_vertex(y_origin[static_cast<std::size_t>(v.index)]);
  }
};

InducedSubgraph induced_subgraph(const BipartiteGraph& g, std::span<const Vertex> keep);
InducedSubgraph delete_vertices(const BipartiteGraph& g, std::span<const Vertex> removed);

// Spanning subgraph made of the edges whose ids are flagged in `keep`.
BipartiteGraph spanning_subgraph(const BipartiteGraph& g, const std::vector<bool>& keep);

// Components ordered by their smallest flat vertex; each component's vertices
// are sorted (X before Y, then by index).
std::vector<std::vector<Vertex>> connected_components(const BipartiteGraph& g);

BipartiteGraph complete_bipartite(int x_count, int y_count);

}  // namespace antifactor
