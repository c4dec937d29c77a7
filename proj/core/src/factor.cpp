#include "antifactor/factor.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "antifactor/errors.hpp"

namespace antifactor {

FactorSubgraph::FactorSubgraph(const BipartiteGraph& parent)
    : FactorSubgraph(parent, std::vector<bool>(static_cast<std::size_t>(parent.edge_count()))) {}

FactorSubgraph::FactorSubgraph(const BipartiteGraph& parent, std::vector<bool> selected)
    : parent_(&parent),
      selected_(std::move(selected)),
      degrees_(static_cast<std::size_t>(parent.vertex_count()), 0) {
  if (static_cast<int>(selected_.size()) != parent.edge_count()) {
    throw InputError("edge bitmap size does not match the parent graph");
  }
  for (int id = 0; id < parent.edge_count(); ++id) {
    if (!selected_[id]) continue;
    const Edge& e = parent.edge(id);
    ++degrees_[parent.flat(x_vertex(e.x))];
    ++degrees_[parent.flat(y_vertex(e.y))];
  }
}

FactorSubgraph FactorSubgraph::from_edge_ids(const BipartiteGraph& parent,
                                             const std::vector<int>& ids) {
  std::vector<bool> selected(static_cast<std::size_t>(parent.edge_count()), false);
  for (int id : ids) {
    if (id < 0 || id >= parent.edge_count()) throw InputError("edge id out of range");
    selected[id] = true;
  }
  return FactorSubgraph(parent, std::move(selected));
}

FactorSubgraph FactorSubgraph::from_mask(const BipartiteGraph& parent, std::uint64_t mask) {
  std::vector<bool> selected(static_cast<std::size_t>(parent.edge_count()), false);
  for (int id = 0; id < parent.edge_count(); ++id) selected[id] = (mask >> id) & 1U;
  return FactorSubgraph(parent, std::move(selected));
}

int FactorSubgraph::size() const {
  return static_cast<int>(std::count(selected_.begin(), selected_.end(), true));
}

std::vector<int> FactorSubgraph::edge_ids() const {
  std::vector<int> ids;
  for (int id = 0; id < static_cast<int>(selected_.size()); ++id) {
    if (selected_[id]) ids.push_back(id);
  }
  return ids;
}

FactorSubgraph to_subgraph(const BipartiteGraph& g, const Assignment& f) {
  if (static_cast<int>(f.target.size()) != g.x_count()) {
    throw InputError("assignment length does not match |X|");
  }
  std::vector<bool> selected(static_cast<std::size_t>(g.edge_count()), false);
  for (int x = 0; x < g.x_count(); ++x) {
    const auto id = g.edge_id(x, f.target[x]);
    if (!id) {
      throw InputError("assignment sends x" + std::to_string(x + 1) + " to a non-neighbour");
    }
    selected[*id] = true;
  }
  return FactorSubgraph(g, std::move(selected));
}

std::vector<int> deviation_by_vertex(const FactorSubgraph& f, const DegreeSpec& spec) {
  const BipartiteGraph& g = f.parent();
  if (!spec.matches(g)) throw InputError("spec does not match graph");
  std::vector<int> out(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    out[v] = spec.at_flat(v).distance(f.degrees()[v]);
  }
  return out;
}

long deviation(const FactorSubgraph& f, const DegreeSpec& spec) {
  const auto per_vertex = deviation_by_vertex(f, spec);
  return std::accumulate(per_vertex.begin(), per_vertex.end(), 0L);
}

}  // namespace antifactor
