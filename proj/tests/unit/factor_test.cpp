#include <gtest/gtest.h>

#include <random>

#include "antifactor/errors.hpp"
#include "antifactor/factor.hpp"
#include "antifactor/generators.hpp"

using namespace antifactor;

namespace {

BipartiteGraph c6() { return BipartiteGraph(3, 3, {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {0, 2}}); }

}  // namespace

TEST(Deviation, AllToOneInK33IsZero) {
  const BipartiteGraph g = complete_bipartite(3, 3);
  const FactorSubgraph f = to_subgraph(g, Assignment{{0, 0, 0}});
  EXPECT_EQ(deviation(f, make_spec(SpecKind::OnePm, g)), 0);
  EXPECT_EQ(f.degree(y_vertex(0)), 3);
}

TEST(Deviation, SixCycleExampleIsOne) {
  const BipartiteGraph g = c6();
  // x0y0, x1y0, x2y1
  const FactorSubgraph f = FactorSubgraph::from_edge_ids(g, {0, 1, 3});
  const auto per = deviation_by_vertex(f, make_spec(SpecKind::OnePm, g));
  EXPECT_EQ(deviation(f, make_spec(SpecKind::OnePm, g)), 1);
  EXPECT_EQ(per[g.flat(y_vertex(1))], 1);
}

TEST(Deviation, EmptySubgraphOfK33IsThree) {
  const BipartiteGraph g = complete_bipartite(3, 3);
  EXPECT_EQ(deviation(FactorSubgraph(g), make_spec(SpecKind::OnePm, g)), 3);
}

TEST(Deviation, ZeroIffEveryDegreeAllowed) {
  const BipartiteGraph g = complete_bipartite(2, 3);
  const DegreeSpec spec = make_spec(SpecKind::One, g);
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const FactorSubgraph f = FactorSubgraph::from_mask(g, mask);
    bool all_in = true;
    for (int v = 0; v < g.vertex_count(); ++v) all_in = all_in && spec.at_flat(v).contains(f.degrees()[v]);
    EXPECT_EQ(deviation(f, spec) == 0, all_in) << mask;
  }
}

TEST(Deviation, OneAndOnePmAgreeOnNonNegativeDegrees) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const BipartiteGraph g = gen::random_bipartite(3, 4, 0.5, seed);
    const DegreeSpec one = make_spec(SpecKind::One, g);
    const DegreeSpec pm = make_spec(SpecKind::OnePm, g);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edge_count()); ++mask) {
      const FactorSubgraph f = FactorSubgraph::from_mask(g, mask);
      ASSERT_EQ(deviation_by_vertex(f, one), deviation_by_vertex(f, pm));
    }
  }
}

TEST(Factor, MaskAndIdsAgree) {
  const BipartiteGraph g = c6();
  const FactorSubgraph a = FactorSubgraph::from_mask(g, 0b100101);
  const FactorSubgraph b = FactorSubgraph::from_edge_ids(g, {0, 2, 5});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 3);
  EXPECT_EQ(a.edge_ids(), (std::vector<int>{0, 2, 5}));
  EXPECT_EQ(a.degree(x_vertex(0)), 2);
}

TEST(Factor, AssignmentMustFollowEdges) {
  const BipartiteGraph g = c6();
  EXPECT_THROW(to_subgraph(g, Assignment{{1, 0, 1}}), InputError);
  EXPECT_THROW(to_subgraph(g, Assignment{{0, 0}}), InputError);
}
