#pragma once

#include <utility>
#include <vector>

namespace antifactor {

// Simple undirected graph on vertices 0..n-1. Edges are stored with u < v in
// construction order.
class GeneralGraph {
 public:
  GeneralGraph() = default;
  // Throws InputError on loops, duplicates or out-of-range endpoints.
  GeneralGraph(int vertex_count, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const;

  friend bool operator==(const GeneralGraph& a, const GeneralGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;  // sorted
};

}  // namespace antifactor
