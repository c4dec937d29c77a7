#include "antifactor/general_graph.hpp"

#include <algorithm>
#include <string>

#include "antifactor/errors.hpp"

namespace antifactor {

GeneralGraph::GeneralGraph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : n_(vertex_count), adj_(static_cast<std::size_t>(std::max(vertex_count, 0))) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
      throw InputError("edge endpoint out of range: " + std::to_string(u + 1) + " " + std::to_string(v + 1));
    }
    if (u == v) throw InputError("loop at vertex " + std::to_string(u + 1));
    if (u > v) std::swap(u, v);
    if (std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end()) {
      throw InputError("duplicate edge " + std::to_string(u + 1) + " " + std::to_string(v + 1));
    }
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    edges_.emplace_back(u, v);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool GeneralGraph::adjacent(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

}  // namespace antifactor
