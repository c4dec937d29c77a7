#include "antifactor/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "antifactor/errors.hpp"

namespace antifactor {

namespace {

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.x) + ", " + std::to_string(e.y) + ")";
}

}  // namespace

BipartiteGraph::BipartiteGraph(int x_count, int y_count, std::vector<Edge> edges)
    : x_count_(x_count), y_count_(y_count), edges_(std::move(edges)) {
  if (x_count < 0 || y_count < 0) {
    throw InputError("negative side size");
  }
  for (const Edge& e : edges_) {
    if (e.x < 0 || e.x >= x_count_ || e.y < 0 || e.y >= y_count_) {
      throw InputError("edge " + edge_text(e) + " out of range for sides " +
                       std::to_string(x_count_) + " x " + std::to_string(y_count_));
    }
  }

  auto fill = [this](Csr& adj, int count, bool from_x) {
    adj.offsets.assign(static_cast<std::size_t>(count) + 1, 0);
    for (const Edge& e : edges_) {
      ++adj.offsets[static_cast<std::size_t>(from_x ? e.x : e.y) + 1];
    }
    std::partial_sum(adj.offsets.begin(), adj.offsets.end(), adj.offsets.begin());
    adj.neighbors.assign(edges_.size(), 0);
    adj.edge_ids.assign(edges_.size(), 0);
    std::vector<int> cursor(adj.offsets.begin(), adj.offsets.end() - 1);
    for (int id = 0; id < edge_count(); ++id) {
      const Edge& e = edges_[static_cast<std::size_t>(id)];
      const int owner = from_x ? e.x : e.y;
      const auto slot = static_cast<std::size_t>(cursor[static_cast<std::size_t>(owner)]++);
      adj.neighbors[slot] = from_x ? e.y : e.x;
      adj.edge_ids[slot] = id;
    }
    // Sort each list by neighbour, carrying the edge ids along.
    std::vector<std::pair<int, int>> scratch;
    for (int v = 0; v < count; ++v) {
      const auto lo = static_cast<std::size_t>(adj.offsets[static_cast<std::size_t>(v)]);
      const auto hi = static_cast<std::size_t>(adj.offsets[static_cast<std::size_t>(v) + 1]);
      scratch.clear();
      for (std::size_t i = lo; i < hi; ++i) scratch.emplace_back(adj.neighbors[i], adj.edge_ids[i]);
      std::sort(scratch.begin(), scratch.end());
      for (std::size_t i = lo; i < hi; ++i) {
        adj.neighbors[i] = scratch[i - lo].first;
        adj.edge_ids[i] = scratch[i - lo].second;
        if (i > lo && adj.neighbors[i] == adj.neighbors[i - 1]) {
          const Edge& dup = edges_[static_cast<std::size_t>(adj.edge_ids[i])];
          throw InputError("duplicate edge " + edge_text(dup));
        }
      }
    }
  };
  fill(x_adj_, x_count_, true);
  fill(y_adj_, y_count_, false);
}

std::span<const int> BipartiteGraph::neighbors(Vertex v) const {
  const Csr& adj = csr(v.side);
  const auto lo = static_cast<std::size_t>(adj.offsets[static_cast<std::size_t>(v.index)]);
  const auto hi = static_cast<std::size_t>(adj.offsets[static_cast<std::size_t>(v.index) + 1]);
  return std::span<const int>(adj.neighbors).subspan(lo, hi - lo);
}

std::span<const int> BipartiteGraph::incident_edges(Vertex v) const {
  const Csr& adj = csr(v.side);
  const auto lo = static_cast<std::size_t>(adj.offsets[static_cast<std::size_t>(v.index)]);
  const auto hi = static_cast<std::size_t>(adj.offsets[static_cast<std::size_t>(v.index) + 1]);
  return std::span<const int>(adj.edge_ids).subspan(lo, hi - lo);
}

std::optional<int> BipartiteGraph::edge_id(int x, int y) const {
  if (x < 0 || x >= x_count_ || y < 0 || y >= y_count_) return std::nullopt;
  const auto nbrs = x_neighbors(x);
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), y);
  if (it == nbrs.end() || *it != y) return std::nullopt;
  return incident_edges(x_vertex(x))[static_cast<std::size_t>(it - nbrs.begin())];
}

std::optional<int> BipartiteGraph::regular_degree() const {
  if (vertex_count() == 0) return std::nullopt;
  const int k = degree(vertex(0));
  for (int v = 1; v < vertex_count(); ++v) {
    if (degree(vertex(v)) != k) return std::nullopt;
  }
  return k;
}

bool BipartiteGraph::is_connected() const {
  return vertex_count() > 0 && connected_components(*this).size() == 1;
}

std::vector<std::vector<Vertex>> connected_components(const BipartiteGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Vertex>> out;
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (comp[static_cast<std::size_t>(start)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[static_cast<std::size_t>(start)] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      const int f = stack.back();
      stack.pop_back();
      const Vertex v = g.vertex(f);
      out.back().push_back(v);
      for (int w : g.neighbors(v)) {
        const int fw = g.flat({opposite(v.side), w});
        if (comp[static_cast<std::size_t>(fw)] < 0) {
          comp[static_cast<std::size_t>(fw)] = id;
          stack.push_back(fw);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

InducedSubgraph induced_subgraph(const BipartiteGraph& g, std::span<const Vertex> keep) {
  std::vector<int> x_new(static_cast<std::size_t>(g.x_count()), -1);
  std::vector<int> y_new(static_cast<std::size_t>(g.y_count()), -1);
  std::vector<Vertex> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  InducedSubgraph sub;
  for (const Vertex& v : sorted) {
    if (v.index < 0 || v.index >= g.side_count(v.side)) {
      throw InputError("vertex index out of range in induced_subgraph");
    }
    if (v.side == Side::X) {
      x_new[static_cast<std::size_t>(v.index)] = static_cast<int>(sub.x_origin.size());
      sub.x_origin.push_back(v.index);
    } else {
      y_new[static_cast<std::size_t>(v.index)] = static_cast<int>(sub.y_origin.size());
      sub.y_origin.push_back(v.index);
    }
  }
  std::vector<Edge> edges;
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    const int nx = x_new[static_cast<std::size_t>(e.x)];
    const int ny = y_new[static_cast<std::size_t>(e.y)];
    if (nx >= 0 && ny >= 0) {
      edges.push_back({nx, ny});
      sub.edge_origin.push_back(id);
    }
  }
  sub.graph = BipartiteGraph(static_cast<int>(sub.x_origin.size()),
                             static_cast<int>(sub.y_origin.size()), std::move(edges));
  return sub;
}

InducedSubgraph delete_vertices(const BipartiteGraph& g, std::span<const Vertex> removed) {
  std::vector<bool> gone(static_cast<std::size_t>(g.vertex_count()), false);
  for (const Vertex& v : removed) gone[static_cast<std::size_t>(g.flat(v))] = true;
  std::vector<Vertex> keep;
  for (int f = 0; f < g.vertex_count(); ++f) {
    if (!gone[static_cast<std::size_t>(f)]) keep.push_back(g.vertex(f));
  }
  return induced_subgraph(g, keep);
}

BipartiteGraph spanning_subgraph(const BipartiteGraph& g, const std::vector<bool>& keep) {
  std::vector<Edge> edges;
  for (int id = 0; id < g.edge_count(); ++id) {
    if (keep[static_cast<std::size_t>(id)]) edges.push_back(g.edge(id));
  }
  return BipartiteGraph(g.x_count(), g.y_count(), std::move(edges));
}

BipartiteGraph complete_bipartite(int x_count, int y_count) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(x_count) * static_cast<std::size_t>(y_count));
  for (int x = 0; x < x_count; ++x) {
    for (int y = 0; y < y_count; ++y) edges.push_back({x, y});
  }
  return BipartiteGraph(x_count, y_count, std::move(edges));
}

}  // namespace antifactor
