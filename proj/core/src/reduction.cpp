#include "antifactor/reduction.hpp"

#include <algorithm>
#include <map>

#include "antifactor/errors.hpp"

namespace antifactor::reduction {

Incidence build_incidence(const GeneralGraph& g0) {
  Incidence inc;
  for (const auto& [u, v] : g0.edges()) inc.objects.push_back({u, v});
  for (int u = 0; u < g0.vertex_count(); ++u) {
    for (int v : g0.neighbors(u)) {
      if (v <= u) continue;
      for (int w : g0.neighbors(v)) {
        if (w > v && g0.adjacent(u, w)) inc.objects.push_back({u, v, w});
      }
    }
  }
  std::vector<Edge> edges;
  for (int j = 0; j < static_cast<int>(inc.objects.size()); ++j) {
    for (int x : inc.objects[j]) edges.push_back({x, j});
  }
  inc.graph = BipartiteGraph(g0.vertex_count(), static_cast<int>(inc.objects.size()), std::move(edges));
  return inc;
}

PackingCover cover_from_antifactor(const GeneralGraph& g0, const Incidence& inc, const Assignment& f) {
  if (inc.graph.x_count() != g0.vertex_count()) throw InputError("incidence graph does not match G0");
  if (!solver::verify_anti_factor(inc.graph, f)) {
    throw InputError("assignment is not an anti-factor of the incidence graph");
  }
  std::vector<std::vector<int>> choosers(inc.objects.size());
  for (int x = 0; x < g0.vertex_count(); ++x) choosers[f.target[x]].push_back(x);
  PackingCover cover;
  for (std::size_t j = 0; j < inc.objects.size(); ++j) {
    const auto& who = choosers[j];
    if (who.empty()) continue;
    if (who.size() == inc.objects[j].size()) {
      cover.objects.push_back(inc.objects[j]);
    } else if (inc.objects[j].size() == 3 && who.size() == 2) {
      cover.objects.push_back(who);
    } else {
      throw InputError("object chosen by an invalid number of vertices");
    }
  }
  return cover;
}

Assignment antifactor_from_cover(const Incidence& inc, const PackingCover& cover) {
  std::map<CoverObject, int> index;
  for (int j = 0; j < static_cast<int>(inc.objects.size()); ++j) index.emplace(inc.objects[j], j);
  Assignment f{std::vector<int>(static_cast<std::size_t>(inc.graph.x_count()), -1)};
  for (const CoverObject& obj : cover.objects) {
    const auto it = index.find(obj);
    if (it == index.end()) throw InputError("cover uses an object that is not in the incidence table");
    for (int v : obj) {
      if (v < 0 || v >= inc.graph.x_count() || f.target[v] != -1) {
        throw InputError("cover objects overlap or leave the vertex range");
      }
      f.target[v] = it->second;
    }
  }
  if (std::find(f.target.begin(), f.target.end(), -1) != f.target.end()) {
    throw InputError("cover leaves a vertex uncovered");
  }
  return f;
}

bool is_valid_cover(const GeneralGraph& g0, const PackingCover& cover) {
  std::vector<int> hits(static_cast<std::size_t>(g0.vertex_count()), 0);
  for (const CoverObject& obj : cover.objects) {
    if (obj.size() != 2 && obj.size() != 3) return false;
    for (std::size_t i = 0; i < obj.size(); ++i) {
      if (obj[i] < 0 || obj[i] >= g0.vertex_count()) return false;
      ++hits[obj[i]];
      for (std::size_t j = i + 1; j < obj.size(); ++j) {
        if (!g0.adjacent(obj[i], obj[j])) return false;
      }
    }
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

PackResult pack_edges_triangles(const GeneralGraph& g0, const solver::Options& options) {
  const Incidence inc = build_incidence(g0);
  PackResult result;
  result.outcome = solver::solve_anti_factor(inc.graph, options);
  if (result.outcome.status == solver::Status::CapExceeded) {
    throw ResourceError("solver budget exhausted on the incidence graph");
  }
  if (result.outcome.status == solver::Status::Sat) {
    result.cover = cover_from_antifactor(g0, inc, *result.outcome.assignment);
  }
  return result;
}

namespace {

bool cover_search(const GeneralGraph& g0, std::vector<bool>& covered, PackingCover& cover) {
  const auto it = std::find(covered.begin(), covered.end(), false);
  if (it == covered.end()) return true;
  const int v = static_cast<int>(it - covered.begin());
  covered[v] = true;
  const auto& nbrs = g0.neighbors(v);
  for (int u : nbrs) {
    if (covered[u]) continue;
    covered[u] = true;
    cover.objects.push_back({v, u});
    if (cover_search(g0, covered, cover)) return true;
    cover.objects.pop_back();
    for (int w : nbrs) {
      if (w <= u || covered[w] || !g0.adjacent(u, w)) continue;
      covered[w] = true;
      cover.objects.push_back({v, u, w});
      if (cover_search(g0, covered, cover)) return true;
      cover.objects.pop_back();
      covered[w] = false;
    }
    covered[u] = false;
  }
  covered[v] = false;
  return false;
}

}  // namespace

std::optional<PackingCover> brute_force_cover(const GeneralGraph& g0, int vertex_cap) {
  if (g0.vertex_count() > vertex_cap) {
    throw ResourceError("brute-force cover is capped at " + std::to_string(vertex_cap) + " vertices");
  }
  std::vector<bool> covered(static_cast<std::size_t>(g0.vertex_count()), false);
  PackingCover cover;
  if (cover_search(g0, covered, cover)) return cover;
  return std::nullopt;
}

std::string write_cover(const PackingCover& cover) {
  std::string out;
  for (const CoverObject& obj : cover.objects) {
    out += obj.size() == 2 ? "E" : "T";
    for (int v : obj) out += " " + std::to_string(v + 1);
    out += "\n";
  }
  return out;
}

}  // namespace antifactor::reduction
