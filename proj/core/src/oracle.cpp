#include "antifactor/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "antifactor/errors.hpp"

namespace antifactor::oracle {

namespace {

nlohmann::json edges_json(const BipartiteGraph& g, std::uint64_t mask) {
  nlohmann::json out = nlohmann::json::array();
  for (int id = 0; id < g.edge_count(); ++id) {
    if ((mask >> id) & 1U) out.push_back({g.edge(id).x + 1, g.edge(id).y + 1});
  }
  return out;
}

nlohmann::json vertices_json(const std::vector<Vertex>& vs) {
  nlohmann::json out = nlohmann::json::array();
  for (const Vertex& v : vs) out.push_back(vertex_name(v));
  return out;
}

int count_components(const BipartiteGraph& g, const std::vector<Vertex>& keep) {
  return static_cast<int>(connected_components(induced_subgraph(g, keep).graph).size());
}

std::vector<std::vector<Vertex>> components_of(const BipartiteGraph& g,
                                               const std::vector<Vertex>& keep) {
  const InducedSubgraph sub = induced_subgraph(g, keep);
  std::vector<std::vector<Vertex>> out;
  for (const auto& comp : connected_components(sub.graph)) {
    std::vector<Vertex> mapped;
    for (const Vertex& v : comp) mapped.push_back(sub.origin(v));
    std::sort(mapped.begin(), mapped.end());
    out.push_back(std::move(mapped));
  }
  return out;
}

StructureReport build_report(const BipartiteGraph& g, const DegreeSpec& spec, const Sweep& s) {
  StructureReport r{s.nabla, FactorSubgraph::from_mask(g, s.first_optimum), s.degree_sets,
                    classify(s.degree_sets, spec)};
  r.critical = g.is_connected() &&
               std::all_of(r.partition.begin(), r.partition.end(),
                           [](Label l) { return l == Label::D; });
  r.component_count_d = count_components(g, r.members(Label::D, g));

  std::vector<bool> in_a(static_cast<std::size_t>(g.vertex_count()), false);
  for (int v = 0; v < g.vertex_count(); ++v) in_a[v] = r.partition[v] == Label::A;
  long rhs = r.component_count_d;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const Vertex vx = g.vertex(v);
    if (r.partition[v] == Label::B) {
      int outside_a = 0;
      for (int w : g.neighbors(vx)) {
        if (!in_a[g.flat({opposite(vx.side), w})]) ++outside_a;
      }
      rhs += spec.at_flat(v).min() - outside_a;
    } else if (r.partition[v] == Label::A) {
      rhs -= *spec.at_flat(v).max();
    }
  }
  r.deficiency_rhs = rhs;
  r.deficiency_identity_holds = rhs == r.nabla;
  return r;
}

bool critical_one_pm(const BipartiteGraph& g, const Config& config) {
  return is_critical(g, make_spec(SpecKind::OnePm, g), config);
}

long nabla_one_pm(const BipartiteGraph& g, const Config& config) {
  return minimize(g, make_spec(SpecKind::OnePm, g), config).nabla;
}

}  // namespace

int DegreeValues::min() const { return std::countr_zero(mask_); }

int DegreeValues::max() const { return 63 - std::countl_zero(mask_); }

bool DegreeValues::is_interval() const {
  if (mask_ == 0) return true;
  const std::uint64_t shifted = mask_ >> min();
  return (shifted & (shifted + 1)) == 0;
}

std::vector<int> DegreeValues::values() const {
  std::vector<int> out;
  for (int d = 0; d < 64; ++d) {
    if (contains(d)) out.push_back(d);
  }
  return out;
}

char label_char(Label l) {
  switch (l) {
    case Label::A: return 'A';
    case Label::B: return 'B';
    case Label::C: return 'C';
    case Label::D: return 'D';
  }
  return '?';
}

std::vector<Vertex> StructureReport::members(Label l, const BipartiteGraph& g) const {
  std::vector<Vertex> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (partition[v] == l) out.push_back(g.vertex(v));
  }
  return out;
}

std::vector<Label> classify(const std::vector<DegreeValues>& degree_sets, const DegreeSpec& spec) {
  std::vector<Label> out;
  out.reserve(degree_sets.size());
  for (int v = 0; v < static_cast<int>(degree_sets.size()); ++v) {
    const DegreeValues& seen = degree_sets[v];
    const DegreeSet& allowed = spec.at_flat(v);
    const auto values = seen.values();
    const bool inside = std::all_of(values.begin(), values.end(),
                                    [&](int d) { return allowed.contains(d); });
    if (inside) {
      out.push_back(Label::C);
    } else if (allowed.bounded() && seen.min() >= *allowed.max()) {
      out.push_back(Label::A);
    } else if (seen.max() <= allowed.min()) {
      out.push_back(Label::B);
    } else {
      out.push_back(Label::D);
    }
  }
  return out;
}

NablaResult nabla(const BipartiteGraph& g, const DegreeSpec& spec, const Config& config) {
  const Minimum m = minimize(g, spec, config);
  return {m.nabla, FactorSubgraph::from_mask(g, m.first_optimum)};
}

std::vector<DegreeValues> degree_profile(const BipartiteGraph& g, const DegreeSpec& spec,
                                         const Config& config) {
  return sweep(g, spec, config).degree_sets;
}

StructureReport decomposition(const BipartiteGraph& g, const DegreeSpec& spec,
                              const Config& config) {
  return build_report(g, spec, sweep(g, spec, config));
}

bool is_critical(const BipartiteGraph& g, const DegreeSpec& spec, const Config& config) {
  const StructureReport r = decomposition(g, spec, config);
  if (r.critical && r.nabla != 1) {
    throw ConsistencyError("critical graph with deviation " + std::to_string(r.nabla));
  }
  return r.critical;
}

DeficiencyCheck deficiency_identity(const BipartiteGraph& g, const DegreeSpec& spec,
                                    const Config& config) {
  const StructureReport r = decomposition(g, spec, config);
  return {r.nabla, r.deficiency_rhs};
}

bool AuditReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* AuditReport::find(const std::string& name) const {
  for (const CheckResult& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

AuditReport structure_audit(const BipartiteGraph& g, const DegreeSpec& spec, const Config& config) {
  if (!spec.matches(g)) throw InputError("spec does not match graph");
  if (!validate_allowed(spec)) throw PreconditionError("structure audit needs an allowed spec");
  const Sweep s = sweep(g, spec, config);
  const StructureReport r = build_report(g, spec, s);
  const auto& labels = r.partition;
  const int n = g.vertex_count();
  AuditReport audit;

  {
    CheckResult c{"no_edges_between_c_and_d", true, nullptr};
    for (const Edge& e : g.edges()) {
      const Label lx = labels[g.flat(x_vertex(e.x))];
      const Label ly = labels[g.flat(y_vertex(e.y))];
      if ((lx == Label::C && ly == Label::D) || (lx == Label::D && ly == Label::C)) {
        c.passed = false;
        c.witness = {{"edge", {e.x + 1, e.y + 1}}};
        break;
      }
    }
    audit.checks.push_back(std::move(c));
  }

  {
    CheckResult interval{"d_degree_sets_are_intervals", true, nullptr};
    CheckResult gaps{"d_no_consecutive_allowed_degrees", true, nullptr};
    for (int v = 0; v < n && (interval.passed || gaps.passed); ++v) {
      if (labels[v] != Label::D) continue;
      const DegreeValues& seen = r.degree_sets[v];
      if (interval.passed && !seen.is_interval()) {
        interval.passed = false;
        interval.witness = {{"vertex", vertex_name(g.vertex(v))}, {"degrees", seen.values()}};
      }
      for (int d : seen.values()) {
        if (gaps.passed && seen.contains(d + 1) && spec.at_flat(v).contains(d) &&
            spec.at_flat(v).contains(d + 1)) {
          gaps.passed = false;
          gaps.witness = {{"vertex", vertex_name(g.vertex(v))}, {"pair", {d, d + 1}}};
        }
      }
    }
    audit.checks.push_back(std::move(interval));
    audit.checks.push_back(std::move(gaps));
  }

  {
    // Components of G[D] under the degree spec shifted by the edges into B.
    const auto b_members = r.members(Label::B, g);
    struct Piece {
      InducedSubgraph sub;
      DegreeSpec spec;
      long nabla = 0;
    };
    std::vector<Piece> pieces;
    CheckResult critical{"d_components_critical", true, nlohmann::json::array()};
    for (const auto& comp : components_of(g, r.members(Label::D, g))) {
      InducedSubgraph sub = induced_subgraph(g, comp);
      DegreeSpec local = project_spec(restrict_spec(spec, comp, b_members, g).spec, sub);
      const StructureReport inner = decomposition(sub.graph, local, config);
      critical.witness.push_back({{"component", vertices_json(comp)},
                                  {"nabla", inner.nabla},
                                  {"critical", inner.critical}});
      if (!inner.critical) critical.passed = false;
      pieces.push_back({std::move(sub), std::move(local), inner.nabla});
    }
    audit.checks.push_back(std::move(critical));

    CheckResult restricted{"d_restrictions_optimal", true, nullptr};
    std::uint64_t visited = 0;
    for_each_optimum(
        g, spec, s.nabla,
        [&](std::uint64_t mask) {
          ++visited;
          if (!restricted.passed) return;
          for (std::size_t p = 0; p < pieces.size(); ++p) {
            const Piece& piece = pieces[p];
            std::vector<int> deg(static_cast<std::size_t>(piece.sub.graph.vertex_count()), 0);
            for (int id = 0; id < piece.sub.graph.edge_count(); ++id) {
              if (!((mask >> piece.sub.edge_origin[id]) & 1U)) continue;
              const Edge& e = piece.sub.graph.edge(id);
              ++deg[piece.sub.graph.flat(x_vertex(e.x))];
              ++deg[piece.sub.graph.flat(y_vertex(e.y))];
            }
            long dev = 0;
            for (int v = 0; v < piece.sub.graph.vertex_count(); ++v) {
              dev += piece.spec.at_flat(v).distance(deg[v]);
            }
            if (dev != piece.nabla) {
              restricted.passed = false;
              restricted.witness = {{"optimum", edges_json(g, mask)},
                                    {"component", static_cast<int>(p)},
                                    {"restricted_deviation", dev},
                                    {"component_nabla", piece.nabla}};
              return;
            }
          }
        },
        config);
    if (restricted.passed) restricted.witness = {{"optima_checked", visited}};
    audit.checks.push_back(std::move(restricted));
  }

  {
    CheckResult under{"b_has_underfull_optimum", true, nlohmann::json::array()};
    CheckResult over{"a_has_overfull_optimum", true, nlohmann::json::array()};
    CheckResult both{"d_has_optima_on_both_sides", true, nlohmann::json::array()};
    for (int v = 0; v < n; ++v) {
      const DegreeValues& seen = r.degree_sets[v];
      const DegreeSet& allowed = spec.at_flat(v);
      const std::string name = vertex_name(g.vertex(v));
      if (labels[v] == Label::B) {
        const int d = seen.min();
        if (d < allowed.min()) {
          under.witness.push_back({{"vertex", name}, {"degree", d},
                                   {"optimum", edges_json(g, s.witness[v][d])}});
        } else {
          under.passed = false;
          under.witness.push_back({{"vertex", name}, {"missing", true}});
        }
      } else if (labels[v] == Label::A) {
        const int d = seen.max();
        if (d > *allowed.max()) {
          over.witness.push_back({{"vertex", name}, {"degree", d},
                                  {"optimum", edges_json(g, s.witness[v][d])}});
        } else {
          over.passed = false;
          over.witness.push_back({{"vertex", name}, {"missing", true}});
        }
      } else if (labels[v] == Label::D) {
        const int lo = seen.min();
        const int hi = seen.max();
        const bool below = !allowed.max() || lo < *allowed.max();
        const bool above = hi > allowed.min();
        if (below && above) {
          both.witness.push_back({{"vertex", name},
                                  {"low", {{"degree", lo}, {"optimum", edges_json(g, s.witness[v][lo])}}},
                                  {"high", {{"degree", hi}, {"optimum", edges_json(g, s.witness[v][hi])}}}});
        } else {
          both.passed = false;
          both.witness.push_back({{"vertex", name}, {"missing", true}});
        }
      }
    }
    audit.checks.push_back(std::move(under));
    audit.checks.push_back(std::move(over));
    audit.checks.push_back(std::move(both));
  }

  audit.checks.push_back({"critical_has_deviation_one", !r.critical || r.nabla == 1,
                          {{"critical", r.critical}, {"nabla", r.nabla}}});
  audit.checks.push_back({"deficiency_identity", r.deficiency_identity_holds,
                          {{"lhs", r.nabla}, {"rhs", r.deficiency_rhs}}});
  return audit;
}

std::optional<TutteWitness> tutte_witness(const BipartiteGraph& g, const Config& config) {
  if (g.x_count() > config.subset_cap) {
    throw ResourceError("|X| = " + std::to_string(g.x_count()) + " exceeds the subset cap of " +
                        std::to_string(config.subset_cap));
  }
  // Criticality of a vertex set depends only on the set; many S share
  // components.
  std::map<std::vector<Vertex>, bool> memo;
  auto critical = [&](const std::vector<Vertex>& comp) {
    auto [it, fresh] = memo.try_emplace(comp, false);
    if (fresh) it->second = critical_one_pm(induced_subgraph(g, comp).graph, config);
    return it->second;
  };

  const int nx = g.x_count();
  std::vector<int> pick;
  for (int size = 0; size <= nx; ++size) {
    pick.resize(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::vector<Vertex> removed;
      for (int x : pick) removed.push_back(x_vertex(x));
      const InducedSubgraph rest = delete_vertices(g, removed);
      TutteWitness w{pick, {}};
      for (const auto& comp : connected_components(rest.graph)) {
        std::vector<Vertex> mapped;
        for (const Vertex& v : comp) mapped.push_back(rest.origin(v));
        std::sort(mapped.begin(), mapped.end());
        if (critical(mapped)) w.critical_components.push_back(std::move(mapped));
      }
      if (static_cast<int>(w.critical_components.size()) > size) return w;

      // Next combination in lexicographic order.
      int i = size - 1;
      while (i >= 0 && pick[i] == nx - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

CriticalProperties critical_properties(const BipartiteGraph& g, const Config& config) {
  const DegreeSpec spec = make_spec(SpecKind::OnePm, g);
  const StructureReport r = decomposition(g, spec, config);
  if (!r.critical) throw PreconditionError("critical_properties: graph is not critical");

  CriticalProperties p;
  for (int x = 0; x < g.x_count() && p.deletions_have_factor; ++x) {
    const Vertex gone[] = {x_vertex(x)};
    if (nabla_one_pm(delete_vertices(g, gone).graph, config) != 0) {
      p.deletions_have_factor = false;
      p.failing_deletion = x;
    }
  }
  p.degrees_within_two = std::all_of(r.degree_sets.begin(), r.degree_sets.end(),
                                     [](const DegreeValues& s) { return (s.mask() & ~7ULL) == 0; });
  p.x_count_odd = g.x_count() % 2 == 1;
  for (int y = 0; y < g.y_count(); ++y) {
    const auto nbrs = g.y_neighbors(y);
    const int deg = static_cast<int>(nbrs.size());
    for (int a = 0; a < deg; ++a) {
      for (int b = a + 1; b < deg; ++b) {
        for (int c = b + 1; c < deg; ++c) {
          const Vertex gone[] = {x_vertex(nbrs[a]), x_vertex(nbrs[b]), x_vertex(nbrs[c]),
                                 y_vertex(y)};
          const long value = nabla_one_pm(delete_vertices(g, gone).graph, config);
          ++p.triples_checked;
          p.triple_values.push_back(value);
          if (value != 2) p.triple_deletions_two = false;
        }
      }
    }
  }
  return p;
}

bool a_within_x_and_b_empty(const BipartiteGraph& g, const Config& config) {
  const StructureReport r = decomposition(g, make_spec(SpecKind::OnePm, g), config);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (r.partition[v] == Label::B) return false;
    if (r.partition[v] == Label::A && g.vertex(v).side != Side::X) return false;
  }
  return true;
}

Dichotomy dichotomy_check(const BipartiteGraph& g, const Config& config) {
  const auto k = g.regular_degree();
  if (!k || *k < 3) throw PreconditionError("dichotomy_check needs a k-regular graph, k >= 3");
  if (!g.is_connected()) throw PreconditionError("dichotomy_check needs a connected graph");
  const StructureReport r = decomposition(g, make_spec(SpecKind::OnePm, g), config);
  const bool has_factor = r.nabla == 0;
  if (has_factor == r.critical) {
    throw ConsistencyError(has_factor ? "graph both has a factor and is critical"
                                      : "regular graph neither has a factor nor is critical");
  }
  return has_factor ? Dichotomy::HasFactor : Dichotomy::Critical;
}

OmegaConsistency omega_consistency(const BipartiteGraph& g, const Config& config) {
  const StructureReport r = decomposition(g, make_spec(SpecKind::OnePm, g), config);
  OmegaConsistency out;
  out.b_empty = r.members(Label::B, g).empty();
  out.omega_d = r.component_count_d;
  const InducedSubgraph rest = delete_vertices(g, r.members(Label::A, g));
  for (const auto& comp : connected_components(rest.graph)) {
    if (critical_one_pm(induced_subgraph(rest.graph, comp).graph, config)) {
      ++out.critical_components_minus_a;
    }
  }
  return out;
}

std::string vertex_name(const Vertex& v) {
  return (v.side == Side::X ? "x" : "y") + std::to_string(v.index + 1);
}

nlohmann::json vertex_json(const Vertex& v) { return vertex_name(v); }

nlohmann::json to_json(const StructureReport& r, const BipartiteGraph& g) {
  nlohmann::json vertices = nlohmann::json::array();
  for (int v = 0; v < g.vertex_count(); ++v) {
    vertices.push_back({{"vertex", vertex_name(g.vertex(v))},
                        {"label", std::string(1, label_char(r.partition[v]))},
                        {"degrees", r.degree_sets[v].values()}});
  }
  nlohmann::json optimum = nlohmann::json::array();
  for (int id : r.one_optimal.edge_ids()) optimum.push_back({g.edge(id).x + 1, g.edge(id).y + 1});
  return {{"nabla", r.nabla},
          {"optimum", optimum},
          {"vertices", vertices},
          {"critical", r.critical},
          {"components_d", r.component_count_d},
          {"deficiency", {{"lhs", r.nabla}, {"rhs", r.deficiency_rhs},
                          {"holds", r.deficiency_identity_holds}}}};
}

nlohmann::json to_json(const AuditReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : r.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
  }
  return {{"all_passed", r.all_passed()}, {"checks", checks}};
}

nlohmann::json to_json(const std::optional<TutteWitness>& w, const BipartiteGraph&) {
  if (!w) return nullptr;
  nlohmann::json s = nlohmann::json::array();
  for (int x : w->s) s.push_back(vertex_name(x_vertex(x)));
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : w->critical_components) comps.push_back(vertices_json(c));
  return {{"s", s}, {"q", w->critical_components.size()}, {"critical_components", comps}};
}

nlohmann::json to_json(const CriticalProperties& p) {
  return {{"deletions_have_factor", p.deletions_have_factor},
          {"failing_deletion", p.failing_deletion
                                   ? nlohmann::json(vertex_name(x_vertex(*p.failing_deletion)))
                                   : nlohmann::json(nullptr)},
          {"degrees_within_two", p.degrees_within_two},
          {"x_count_odd", p.x_count_odd},
          {"triple_deletions_two", p.triple_deletions_two},
          {"triples_checked", p.triples_checked},
          {"all", p.all()}};
}

}  // namespace antifactor::oracle
