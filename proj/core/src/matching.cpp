#include "antifactor/matching.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "antifactor/errors.hpp"

namespace antifactor {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

class HopcroftKarp {
 public:
  HopcroftKarp(const BipartiteGraph& g, const std::vector<bool>* removed)
      : g_(g),
        removed_(removed),
        mate_x_(static_cast<std::size_t>(g.x_count()), -1),
        mate_y_(static_cast<std::size_t>(g.y_count()), -1),
        dist_(static_cast<std::size_t>(g.x_count())),
        cursor_(static_cast<std::size_t>(g.x_count())) {}

  std::vector<int> run() {
    while (layer()) {
      std::fill(cursor_.begin(), cursor_.end(), 0);
      for (int x = 0; x < g_.x_count(); ++x) {
        if (mate_x_[x] < 0) augment(x);
      }
    }
    return mate_x_;
  }

 private:
  bool usable(int x, int slot) const {
    return removed_ == nullptr || !(*removed_)[g_.incident_edges(x_vertex(x))[slot]];
  }

  // BFS from all free X vertices; true if some free Y vertex is reachable.
  bool layer() {
    std::vector<int> queue;
    for (int x = 0; x < g_.x_count(); ++x) {
      dist_[x] = mate_x_[x] < 0 ? 0 : kUnreached;
      if (dist_[x] == 0) queue.push_back(x);
    }
    free_layer_ = kUnreached;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int x = queue[head];
      if (dist_[x] >= free_layer_) continue;
      const auto nbrs = g_.x_neighbors(x);
      for (int slot = 0; slot < static_cast<int>(nbrs.size()); ++slot) {
        if (!usable(x, slot)) continue;
        const int next = mate_y_[nbrs[slot]];
        if (next < 0) {
          if (free_layer_ == kUnreached) free_layer_ = dist_[x] + 1;
        } else if (dist_[next] == kUnreached) {
          dist_[next] = dist_[x] + 1;
          queue.push_back(next);
        }
      }
    }
    return free_layer_ != kUnreached;
  }

  // Iterative layered DFS from a free root; flips the path when it reaches a
  // free Y vertex on the shortest layer.
  bool augment(int root) {
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int x = stack.back();
      const auto nbrs = g_.x_neighbors(x);
      int& slot = cursor_[x];
      if (slot >= static_cast<int>(nbrs.size())) {
        dist_[x] = kUnreached;
        stack.pop_back();
        continue;
      }
      if (!usable(x, slot)) {
        ++slot;
        continue;
      }
      const int next = mate_y_[nbrs[slot]];
      if (next < 0) {
        if (dist_[x] + 1 != free_layer_) {
          ++slot;
          continue;
        }
        for (int u : stack) {
          const int y = g_.x_neighbors(u)[cursor_[u]];
          mate_x_[u] = y;
          mate_y_[y] = u;
        }
        return true;
      }
      if (dist_[next] == dist_[x] + 1) {
        stack.push_back(next);
      } else {
        ++slot;
      }
    }
    return false;
  }

  const BipartiteGraph& g_;
  const std::vector<bool>* removed_;
  std::vector<int> mate_x_;
  std::vector<int> mate_y_;
  std::vector<int> dist_;
  std::vector<int> cursor_;
  int free_layer_ = kUnreached;
};

}  // namespace

std::vector<int> maximum_matching(const BipartiteGraph& g) {
  return HopcroftKarp(g, nullptr).run();
}

std::optional<Assignment> perfect_matching(const BipartiteGraph& g) {
  if (g.x_count() != g.y_count()) return std::nullopt;
  auto mate = maximum_matching(g);
  for (int y : mate) {
    if (y < 0) return std::nullopt;
  }
  return Assignment{std::move(mate)};
}

BipartiteGraph extract_regular_factor(const BipartiteGraph& g, int r) {
  const auto k = g.regular_degree();
  if (!k) throw PreconditionError("extract_regular_factor: graph is not regular");
  if (r < 1 || r > *k) {
    throw PreconditionError("extract_regular_factor: need 1 <= r <= " + std::to_string(*k));
  }
  std::vector<bool> taken(static_cast<std::size_t>(g.edge_count()), false);
  for (int round = 0; round < r; ++round) {
    const auto mate = HopcroftKarp(g, &taken).run();
    for (int x = 0; x < g.x_count(); ++x) {
      if (mate[x] < 0) {
        throw ConsistencyError("regular remainder has no perfect matching");
      }
      taken[*g.edge_id(x, mate[x])] = true;
    }
  }
  return spanning_subgraph(g, taken);
}

}  // namespace antifactor
