#pragma once

#include <cstdint>
#include <vector>

#include "antifactor/degree_spec.hpp"
#include "antifactor/graph.hpp"

namespace antifactor {

// Spanning subgraph of a parent graph, stored as an edge-membership bitmap
// over the parent's edge ids plus the cached degree vector (flat-indexed).
// Holds a non-owning pointer to the parent, which must outlive it.
class FactorSubgraph {
 public:
  explicit FactorSubgraph(const BipartiteGraph& parent);
  FactorSubgraph(const BipartiteGraph& parent, std::vector<bool> selected);

  static FactorSubgraph from_edge_ids(const BipartiteGraph& parent, const std::vector<int>& ids);
  // Bit i of `mask` selects edge i. Parent must have at most 64 edges.
  static FactorSubgraph from_mask(const BipartiteGraph& parent, std::uint64_t mask);

  const BipartiteGraph& parent() const { return *parent_; }
  bool contains(int edge_id) const { return selected_[edge_id]; }
  const std::vector<bool>& selected() const { return selected_; }
  int degree(Vertex v) const { return degrees_[parent_->flat(v)]; }
  const std::vector<int>& degrees() const { return degrees_; }
  int size() const;
  std::vector<int> edge_ids() const;

  friend bool operator==(const FactorSubgraph& a, const FactorSubgraph& b) {
    return a.parent_ == b.parent_ && a.selected_ == b.selected_;
  }

 private:
  const BipartiteGraph* parent_;
  std::vector<bool> selected_;
  std::vector<int> degrees_;
};

// A map X -> Y; the star-forest view of a subgraph with d(x) = 1 on X.
struct Assignment {
  std::vector<int> target;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

// Throws InputError if some f(x) is not a neighbour of x.
FactorSubgraph to_subgraph(const BipartiteGraph& g, const Assignment& f);

// Per-vertex min |d_F(v) - h| over h in H(v), flat-indexed.
std::vector<int> deviation_by_vertex(const FactorSubgraph& f, const DegreeSpec& spec);
long deviation(const FactorSubgraph& f, const DegreeSpec& spec);

}  // namespace antifactor
