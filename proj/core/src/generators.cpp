#include "antifactor/generators.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <unordered_set>

#include "antifactor/canonical.hpp"
#include "antifactor/errors.hpp"

namespace antifactor::gen {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace {

void shuffle(std::vector<int>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace

BipartiteGraph random_regular_bipartite(int n, int k, std::uint64_t seed, int retry_cap) {
  if (k < 1 || n < 1) throw InputError("regular generator needs n >= 1 and k >= 1");
  if (k > n) {
    throw InputError("no simple " + std::to_string(k) + "-regular bipartite graph on " +
                     std::to_string(n) + "+" + std::to_string(n) + " vertices; use n >= k");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::vector<bool>> used(static_cast<std::size_t>(n), std::vector<bool>(n, false));
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * k);
  std::vector<int> perm(static_cast<std::size_t>(n));
  int retries = 0;
  for (int j = 0; j < k; ++j) {
    while (true) {
      std::iota(perm.begin(), perm.end(), 0);
      shuffle(perm, rng);
      bool clash = false;
      for (int x = 0; x < n && !clash; ++x) clash = used[x][perm[x]];
      if (!clash) break;
      if (++retries > retry_cap) {
        throw ResourceError("regular generator exhausted its retry cap; try a larger n");
      }
    }
    for (int x = 0; x < n; ++x) {
      used[x][perm[x]] = true;
      edges.push_back({x, perm[x]});
    }
  }
  return BipartiteGraph(n, n, std::move(edges));
}

BipartiteGraph cycle(int n) {
  if (n < 4 || n % 2 != 0) throw InputError("cycle length must be even and at least 4");
  const int h = n / 2;
  std::vector<Edge> edges;
  for (int i = 0; i < h; ++i) {
    edges.push_back({i, i});
    edges.push_back({(i + 1) % h, i});
  }
  return BipartiteGraph(h, h, std::move(edges));
}

BipartiteGraph theta_graph(const std::vector<int>& path_lengths, Side branch_side) {
  if (path_lengths.size() < 3) throw InputError("theta graph needs at least three paths");
  for (int len : path_lengths) {
    if (len < 2) throw InputError("theta graph path lengths must be at least 2");
  }
  const bool all_even = std::all_of(path_lengths.begin(), path_lengths.end(), [](int l) { return l % 2 == 0; });
  const bool all_odd = std::all_of(path_lengths.begin(), path_lengths.end(), [](int l) { return l % 2 == 1; });
  if (!all_even && !all_odd) throw InputError("theta graph paths of mixed parity are not bipartite");

  int counts[2] = {0, 0};
  auto add = [&counts](Side s) { return Vertex{s, counts[static_cast<int>(s)]++}; };
  std::vector<Edge> edges;
  auto join = [&edges](Vertex a, Vertex b) {
    edges.push_back(a.side == Side::X ? Edge{a.index, b.index} : Edge{b.index, a.index});
  };
  const Vertex first = add(branch_side);
  const Vertex second = add(all_even ? branch_side : opposite(branch_side));
  for (int len : path_lengths) {
    Vertex prev = first;
    for (int step = 1; step < len; ++step) {
      const Vertex next = add(opposite(prev.side));
      join(prev, next);
      prev = next;
    }
    join(prev, second);
  }
  return BipartiteGraph(counts[0], counts[1], std::move(edges));
}

std::vector<BipartiteGraph> enumerate_h_family(int max_x) {
  if (max_x > 6) throw ResourceError("h-family enumeration is capped at |X| = 6");
  std::vector<BipartiteGraph> out;
  for (int n = 1; n <= max_x; ++n) {
    const int ny = n + 1;
    std::vector<std::array<int, 3>> triples;
    for (int a = 0; a < ny; ++a) {
      for (int b = a + 1; b < ny; ++b) {
        for (int c = b + 1; c < ny; ++c) triples.push_back({a, b, c});
      }
    }
    std::unordered_set<std::string> seen;
    std::vector<int> choice(static_cast<std::size_t>(n), 0);
    std::vector<int> load(static_cast<std::size_t>(ny), 0);
    auto emit = [&] {
      if (std::find(load.begin(), load.end(), 0) != load.end()) return;
      std::vector<Edge> edges;
      for (int x = 0; x < n; ++x) {
        for (int y : triples[choice[x]]) edges.push_back({x, y});
      }
      BipartiteGraph g(n, ny, std::move(edges));
      if (!g.is_connected()) return;
      if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
    };
    auto place = [&](auto&& self, int x, int from) -> void {
      if (x == n) {
        emit();
        return;
      }
      for (int t = from; t < static_cast<int>(triples.size()); ++t) {
        const auto& tr = triples[t];
        if (load[tr[0]] == 3 || load[tr[1]] == 3 || load[tr[2]] == 3) continue;
        for (int y : tr) ++load[y];
        choice[x] = t;
        self(self, x + 1, t);
        for (int y : tr) --load[y];
      }
    };
    if (!triples.empty()) place(place, 0, 0);
  }
  return out;
}

std::vector<BipartiteGraph> connected_bipartite_graphs(int max_edges) {
  if (max_edges > 14) throw ResourceError("connected graph corpus is capped at 14 edges");
  std::vector<BipartiteGraph> out;
  if (max_edges < 1) return out;
  std::vector<BipartiteGraph> level{BipartiteGraph(1, 1, {{0, 0}})};
  for (int m = 1;; ++m) {
    for (const auto& g : level) out.push_back(g);
    if (m == max_edges) break;
    std::unordered_set<std::string> seen;
    std::vector<BipartiteGraph> next;
    auto offer = [&](int nx, int ny, const BipartiteGraph& base, Edge e) {
      std::vector<Edge> edges(base.edges().begin(), base.edges().end());
      edges.push_back(e);
      BipartiteGraph h(nx, ny, std::move(edges));
      if (seen.insert(canonical_form(h)).second) next.push_back(std::move(h));
    };
    for (const auto& g : level) {
      for (int x = 0; x < g.x_count(); ++x) {
        for (int y = 0; y < g.y_count(); ++y) {
          if (!g.adjacent(x, y)) offer(g.x_count(), g.y_count(), g, {x, y});
        }
      }
      for (int x = 0; x < g.x_count(); ++x) offer(g.x_count(), g.y_count() + 1, g, {x, g.y_count()});
      for (int y = 0; y < g.y_count(); ++y) offer(g.x_count() + 1, g.y_count(), g, {g.x_count(), y});
    }
    level = std::move(next);
  }
  return out;
}

BipartiteGraph random_bipartite(int nx, int ny, double p, std::uint64_t seed) {
  if (nx < 0 || ny < 0 || p < 0 || p > 1) throw InputError("random bipartite parameters out of range");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int x = 0; x < nx; ++x) {
    for (int y = 0; y < ny; ++y) {
      if (uniform_unit(rng) < p) edges.push_back({x, y});
    }
  }
  return BipartiteGraph(nx, ny, std::move(edges));
}

DegreeSpec random_allowed_spec(const BipartiteGraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto draw = [&rng] {
    std::vector<int> base;
    int v = -1 + static_cast<int>(uniform_below(rng, 4));
    const int count = 1 + static_cast<int>(uniform_below(rng, 3));
    base.push_back(v);
    for (int i = 1; i < count; ++i) {
      v += 1 + static_cast<int>(uniform_below(rng, 2));
      base.push_back(v);
    }
    std::optional<int> tail;
    if (uniform_below(rng, 2) == 1) tail = v + 1 + static_cast<int>(uniform_below(rng, 2));
    return DegreeSet(std::move(base), tail);
  };
  std::vector<DegreeSet> xs;
  std::vector<DegreeSet> ys;
  for (int x = 0; x < g.x_count(); ++x) xs.push_back(draw());
  for (int y = 0; y < g.y_count(); ++y) ys.push_back(draw());
  return make_custom_spec(g, std::move(xs), std::move(ys));
}

GeneralGraph erdos_renyi(int n, double p, std::uint64_t seed) {
  if (n < 0 || p < 0 || p > 1) throw InputError("Erdos-Renyi parameters out of range");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (uniform_unit(rng) < p) edges.emplace_back(u, v);
    }
  }
  return GeneralGraph(n, std::move(edges));
}

}  // namespace antifactor::gen
