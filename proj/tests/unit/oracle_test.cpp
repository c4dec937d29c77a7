#include <gtest/gtest.h>

#include "antifactor/errors.hpp"
#include "antifactor/generators.hpp"
#include "antifactor/oracle.hpp"

using namespace antifactor;
using namespace antifactor::oracle;

namespace {

BipartiteGraph c6() { return BipartiteGraph(3, 3, {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {0, 2}}); }
BipartiteGraph star3() { return BipartiteGraph(1, 3, {{0, 0}, {0, 1}, {0, 2}}); }
DegreeSpec pm(const BipartiteGraph& g) { return make_spec(SpecKind::OnePm, g); }

std::vector<std::vector<int>> value_lists(const std::vector<DegreeValues>& sets) {
  std::vector<std::vector<int>> out;
  for (const auto& s : sets) out.push_back(s.values());
  return out;
}

}  // namespace

TEST(Nabla, K33HasAntiFactor) {
  const BipartiteGraph g = complete_bipartite(3, 3);
  const NablaResult r = nabla(g, pm(g));
  EXPECT_EQ(r.value, 0);
  EXPECT_EQ(deviation(r.optimum, pm(g)), 0);
}

TEST(Nabla, SixCycleIsOne) {
  const BipartiteGraph g = c6();
  const NablaResult r = nabla(g, pm(g));
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(deviation(r.optimum, pm(g)), 1);
}

TEST(Nabla, SingleEdgePicksEmptySubgraph) {
  const BipartiteGraph g(1, 1, {{0, 0}});
  const NablaResult r = nabla(g, pm(g));
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(r.optimum.size(), 0);
}

TEST(Nabla, CapIsEnforced) {
  const BipartiteGraph g = complete_bipartite(5, 5);
  EXPECT_THROW(nabla(g, pm(g), Config{24, 18, 1}), ResourceError);
  try {
    nabla(g, pm(g), Config{24, 18, 1});
  } catch (const ResourceError& e) {
    EXPECT_EQ(std::string(e.what()), "graph has 25 edges, above the enumeration cap of 24");
  }
  EXPECT_THROW(nabla(g, pm(g), Config{64, 18, 1}), InputError);
}

TEST(DegreeProfile, K33) {
  const BipartiteGraph g = complete_bipartite(3, 3);
  const auto sets = degree_profile(g, pm(g));
  for (int x = 0; x < 3; ++x) EXPECT_EQ(sets[x].values(), (std::vector<int>{1}));
  // Three edges over Y degrees in {0, 2, 3}: one Y vertex takes all of them.
  for (int y = 3; y < 6; ++y) EXPECT_EQ(sets[y].values(), (std::vector<int>{0, 3}));
}

// Frozen from full enumeration; x0 reaches degree 2 in the optimum
// {x0y0, x0y2, x1y0, x2y2}.
TEST(DegreeProfile, SixCycle) {
  const BipartiteGraph g = c6();
  const auto sets = degree_profile(g, pm(g));
  for (const auto& s : sets) EXPECT_EQ(s.values(), (std::vector<int>{0, 1, 2}));
  const FactorSubgraph f = FactorSubgraph::from_edge_ids(g, {0, 5, 1, 4});
  EXPECT_EQ(deviation(f, pm(g)), 1);
  EXPECT_EQ(f.degree(x_vertex(0)), 2);
}

TEST(DegreeProfile, EmptyGraphGivesZeros) {
  const BipartiteGraph g(2, 1, {});
  const auto sets = degree_profile(g, pm(g));
  for (const auto& s : sets) EXPECT_EQ(s.values(), (std::vector<int>{0}));
  EXPECT_EQ(nabla(g, pm(g)).value, 2);
}

TEST(Decomposition, SixCycleIsAllD) {
  const BipartiteGraph g = c6();
  const StructureReport r = decomposition(g, pm(g));
  for (Label l : r.partition) EXPECT_EQ(l, Label::D);
  EXPECT_TRUE(r.critical);
  EXPECT_EQ(r.component_count_d, 1);
}

TEST(Decomposition, K33IsAllC) {
  const BipartiteGraph g = complete_bipartite(3, 3);
  const StructureReport r = decomposition(g, pm(g));
  for (Label l : r.partition) EXPECT_EQ(l, Label::C);
  EXPECT_FALSE(r.critical);
}

TEST(Decomposition, StarWithXCenterIsAllD) {
  const BipartiteGraph g = star3();
  const StructureReport r = decomposition(g, pm(g));
  for (Label l : r.partition) EXPECT_EQ(l, Label::D);
  for (const auto& s : r.degree_sets) EXPECT_EQ(s.values(), (std::vector<int>{0, 1}));
  EXPECT_EQ(sweep(g, pm(g)).optimum_count, 4u);
}

TEST(Decomposition, TailedSetsNeverLabelledA) {
  // y0 is forced to degree 2 but its set is [0, 1]: label A.
  const BipartiteGraph g(2, 1, {{0, 0}, {1, 0}});
  const DegreeSpec spec = make_custom_spec(g, {DegreeSet::exactly(1), DegreeSet::exactly(1)},
                                           {DegreeSet({0, 1})});
  const StructureReport r = decomposition(g, spec);
  EXPECT_EQ(r.partition[g.flat(y_vertex(0))], Label::A);
  const DegreeSpec tailed = make_custom_spec(g, {DegreeSet::exactly(1), DegreeSet::exactly(1)},
                                             {DegreeSet({0}, 1)});
  EXPECT_EQ(decomposition(g, tailed).partition[g.flat(y_vertex(0))], Label::C);
}

TEST(Decomposition, ClassifyPrecedence) {
  const BipartiteGraph g(1, 1, {{0, 0}});
  const DegreeSpec spec = make_custom_spec(g, {DegreeSet::exactly(1)}, {DegreeSet({3, 4})});
  const std::vector<DegreeValues> sets = {DegreeValues(0b10), DegreeValues(0b11)};
  const auto labels = classify(sets, spec);
  EXPECT_EQ(labels[0], Label::C);
  EXPECT_EQ(labels[1], Label::B);
}

TEST(Critical, Examples) {
  EXPECT_TRUE(is_critical(c6(), pm(c6())));
  const BipartiteGraph k33 = complete_bipartite(3, 3);
  EXPECT_FALSE(is_critical(k33, pm(k33)));
  EXPECT_TRUE(is_critical(star3(), pm(star3())));
  const BipartiteGraph two(2, 2, {{0, 0}, {1, 1}});
  EXPECT_FALSE(is_critical(two, pm(two)));
}

TEST(Deficiency, Examples) {
  const DeficiencyCheck a = deficiency_identity(c6(), pm(c6()));
  EXPECT_EQ(a.lhs, 1);
  EXPECT_EQ(a.rhs, 1);
  const BipartiteGraph k33 = complete_bipartite(3, 3);
  const DeficiencyCheck b = deficiency_identity(k33, pm(k33));
  EXPECT_EQ(b.lhs, 0);
  EXPECT_EQ(b.rhs, 0);
  const DeficiencyCheck c = deficiency_identity(star3(), pm(star3()));
  EXPECT_EQ(c.lhs, 1);
  EXPECT_EQ(c.rhs, 1);
}

TEST(Audit, SixCyclePassesEveryCheck) {
  const AuditReport r = structure_audit(c6(), pm(c6()));
  EXPECT_TRUE(r.all_passed());
  EXPECT_EQ(r.checks.size(), 10u);
  ASSERT_NE(r.find("d_degree_sets_are_intervals"), nullptr);
  EXPECT_EQ(r.find("missing"), nullptr);
}

TEST(Audit, K33PassesVacuously) {
  const BipartiteGraph g = complete_bipartite(3, 3);
  EXPECT_TRUE(structure_audit(g, pm(g)).all_passed());
}

TEST(Audit, RejectsDisallowedSpec) {
  const BipartiteGraph g(1, 1, {{0, 0}});
  const DegreeSpec bad = make_custom_spec(g, {DegreeSet({0, 3})}, {DegreeSet::exactly(0)});
  EXPECT_THROW(structure_audit(g, bad), PreconditionError);
}

TEST(Audit, JsonHasNameAndStatusPerCheck) {
  const nlohmann::json j = to_json(structure_audit(c6(), pm(c6())));
  EXPECT_TRUE(j.at("all_passed").get<bool>());
  EXPECT_EQ(j.at("checks")[0].at("name"), "no_edges_between_c_and_d");
  EXPECT_TRUE(j.at("checks")[0].contains("witness"));
}

TEST(TutteWitness, Examples) {
  const auto w = tutte_witness(c6());
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->s.empty());
  EXPECT_EQ(w->critical_components.size(), 1u);
  EXPECT_FALSE(tutte_witness(complete_bipartite(3, 3)).has_value());
  const auto star = tutte_witness(star3());
  ASSERT_TRUE(star.has_value());
  EXPECT_TRUE(star->s.empty());
}

TEST(TutteWitness, SubsetCap) {
  const BipartiteGraph g(4, 1, {{0, 0}, {1, 0}, {2, 0}, {3, 0}});
  EXPECT_THROW(tutte_witness(g, Config{24, 3, 1}), ResourceError);
}

// Three 6-cycles each joined by one edge to a hub x: G - hub has three
// critical components, so no anti-factor exists.
TEST(TutteWitness, ThreeCyclesOnAHub) {
  std::vector<Edge> edges;
  for (int c = 0; c < 3; ++c) {
    for (int i = 0; i < 3; ++i) {
      edges.push_back({3 * c + i, 3 * c + i});
      edges.push_back({3 * c + (i + 1) % 3, 3 * c + i});
    }
    edges.push_back({9, 3 * c});
  }
  const BipartiteGraph g(10, 9, edges);
  EXPECT_NE(nabla(g, pm(g)).value, 0);
  const auto w = tutte_witness(g);
  ASSERT_TRUE(w.has_value());
  EXPECT_GT(w->critical_components.size(), w->s.size());
  for (const auto& comp : w->critical_components) {
    EXPECT_TRUE(is_critical(induced_subgraph(g, comp).graph, pm(induced_subgraph(g, comp).graph)));
  }
}

TEST(CriticalProperties, SixCycle) {
  const CriticalProperties p = critical_properties(c6());
  EXPECT_TRUE(p.deletions_have_factor);
  EXPECT_TRUE(p.degrees_within_two);
  EXPECT_TRUE(p.x_count_odd);
  EXPECT_TRUE(p.triple_deletions_two);
  EXPECT_EQ(p.triples_checked, 0);
}

TEST(CriticalProperties, Star) {
  const CriticalProperties p = critical_properties(star3());
  EXPECT_TRUE(p.all());
  EXPECT_EQ(p.triples_checked, 0);
}

TEST(CriticalProperties, RejectsNonCritical) {
  EXPECT_THROW(critical_properties(complete_bipartite(3, 3)), PreconditionError);
}

TEST(AWithinX, Examples) {
  EXPECT_TRUE(a_within_x_and_b_empty(c6()));
  EXPECT_TRUE(a_within_x_and_b_empty(complete_bipartite(3, 3)));
}

TEST(Dichotomy, RegularExamples) {
  EXPECT_EQ(dichotomy_check(complete_bipartite(3, 3)), Dichotomy::HasFactor);
  EXPECT_EQ(dichotomy_check(complete_bipartite(4, 4), Config{63, 18, 1}), Dichotomy::HasFactor);
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 5; ++seed) {
    const BipartiteGraph g = gen::random_regular_bipartite(6, 3, seed);
    if (!g.is_connected()) continue;
    EXPECT_EQ(dichotomy_check(g), Dichotomy::HasFactor);
    ++checked;
  }
}

TEST(Dichotomy, Preconditions) {
  EXPECT_THROW(dichotomy_check(c6()), PreconditionError);
  const BipartiteGraph two_k33(6, 6, [] {
    std::vector<Edge> e;
    for (int b = 0; b < 2; ++b)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) e.push_back({3 * b + i, 3 * b + j});
    return e;
  }());
  EXPECT_THROW(dichotomy_check(two_k33, Config{24, 18, 1}), PreconditionError);
}

TEST(OmegaConsistency, SixCycleAndStar) {
  const OmegaConsistency a = omega_consistency(c6());
  EXPECT_TRUE(a.b_empty);
  EXPECT_EQ(a.omega_d, 1);
  EXPECT_TRUE(a.consistent());
  EXPECT_TRUE(omega_consistency(star3()).consistent());
}

TEST(Sweep, JobsDoNotChangeResults) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const BipartiteGraph g = gen::random_bipartite(4, 5, 0.5, seed);
    const DegreeSpec spec = gen::random_allowed_spec(g, seed);
    const Sweep a = sweep(g, spec, Config{24, 18, 1});
    const Sweep b = sweep(g, spec, Config{24, 18, 4});
    EXPECT_EQ(a.nabla, b.nabla);
    EXPECT_EQ(a.first_optimum, b.first_optimum);
    EXPECT_EQ(value_lists(a.degree_sets), value_lists(b.degree_sets));
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.optimum_count, b.optimum_count);
  }
}

TEST(Sweep, WitnessesRealizeTheirDegree) {
  const BipartiteGraph g = c6();
  const Sweep s = sweep(g, pm(g));
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int d : s.degree_sets[v].values()) {
      const FactorSubgraph f = FactorSubgraph::from_mask(g, s.witness[v][d]);
      EXPECT_EQ(f.degrees()[v], d);
      EXPECT_EQ(deviation(f, pm(g)), s.nabla);
    }
  }
}

TEST(Sweep, ForEachOptimumVisitsInLexOrder) {
  const BipartiteGraph g = star3();
  std::vector<std::uint64_t> seen;
  for_each_optimum(g, pm(g), 1, [&](std::uint64_t m) { seen.push_back(m); });
  EXPECT_EQ(seen, (std::vector<std::uint64_t>{0b000, 0b100, 0b010, 0b001}));
}

TEST(OracleJson, ReportShape) {
  const BipartiteGraph g = c6();
  const nlohmann::json j = to_json(decomposition(g, pm(g)), g);
  EXPECT_EQ(j.at("nabla"), 1);
  EXPECT_EQ(j.at("vertices")[0].at("vertex"), "x1");
  EXPECT_EQ(j.at("vertices")[0].at("label"), "D");
  EXPECT_EQ(to_json(tutte_witness(c6()), g).at("s"), nlohmann::json::array());
  EXPECT_TRUE(to_json(std::optional<TutteWitness>{}, g).is_null());
}
