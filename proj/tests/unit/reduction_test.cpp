#include <gtest/gtest.h>

#include <algorithm>

#include "antifactor/errors.hpp"
#include "antifactor/generators.hpp"
#include "antifactor/reduction.hpp"

using namespace antifactor;
using namespace antifactor::reduction;

namespace {

GeneralGraph k3() { return GeneralGraph(3, {{0, 1}, {1, 2}, {0, 2}}); }
GeneralGraph path3() { return GeneralGraph(3, {{0, 1}, {1, 2}}); }

GeneralGraph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return GeneralGraph(n, e);
}

}  // namespace

TEST(Incidence, TriangleHasFourObjects) {
  const Incidence inc = build_incidence(k3());
  EXPECT_EQ(inc.graph.x_count(), 3);
  EXPECT_EQ(inc.graph.y_count(), 4);
  EXPECT_EQ(inc.objects.back(), (CoverObject{0, 1, 2}));
  EXPECT_EQ(inc.graph.degree(y_vertex(3)), 3);
}

TEST(Incidence, PathAndSingleEdge) {
  EXPECT_EQ(build_incidence(path3()).graph.y_count(), 2);
  const Incidence edge = build_incidence(GeneralGraph(2, {{0, 1}}));
  EXPECT_EQ(edge.graph, complete_bipartite(2, 1));
}

TEST(Incidence, TrianglesInLexOrder) {
  const Incidence inc = build_incidence(complete(4));
  ASSERT_EQ(inc.objects.size(), 10u);
  EXPECT_EQ(inc.objects[6], (CoverObject{0, 1, 2}));
  EXPECT_EQ(inc.objects[7], (CoverObject{0, 1, 3}));
  EXPECT_EQ(inc.objects[8], (CoverObject{0, 2, 3}));
  EXPECT_EQ(inc.objects[9], (CoverObject{1, 2, 3}));
}

TEST(Pack, Examples) {
  const PackResult tri = pack_edges_triangles(k3());
  ASSERT_TRUE(tri.cover.has_value());
  EXPECT_EQ(tri.cover->objects, (std::vector<CoverObject>{{0, 1, 2}}));
  EXPECT_FALSE(pack_edges_triangles(path3()).cover.has_value());

  const GeneralGraph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  const PackResult r = pack_edges_triangles(c6);
  ASSERT_TRUE(r.cover.has_value());
  EXPECT_TRUE(is_valid_cover(c6, *r.cover));
  EXPECT_EQ(r.cover->objects.size(), 3u);
  ASSERT_TRUE(brute_force_cover(c6).has_value());
}

TEST(Pack, IsolatedVertexIsInfeasible) {
  const GeneralGraph g(3, {{0, 1}});
  EXPECT_FALSE(pack_edges_triangles(g).cover.has_value());
  EXPECT_FALSE(brute_force_cover(g).has_value());
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force_cover(k3())->objects, (std::vector<CoverObject>{{0, 1, 2}}));
  EXPECT_FALSE(brute_force_cover(GeneralGraph(1, {})).has_value());
  const auto k4 = brute_force_cover(complete(4));
  ASSERT_TRUE(k4.has_value());
  EXPECT_EQ(k4->objects.size(), 2u);
  for (const auto& obj : k4->objects) EXPECT_EQ(obj.size(), 2u);
  EXPECT_THROW(brute_force_cover(GeneralGraph(13, {})), ResourceError);
  EXPECT_TRUE(brute_force_cover(GeneralGraph(0, {})).has_value());
}

TEST(CoverFromAntiFactor, Examples) {
  const GeneralGraph g = k3();
  const Incidence inc = build_incidence(g);
  EXPECT_EQ(cover_from_antifactor(g, inc, Assignment{{3, 3, 3}}).objects, (std::vector<CoverObject>{{0, 1, 2}}));
  // In K4: 0 and 1 choose triangle {0,1,2}, 2 and 3 choose edge {2,3}.
  const GeneralGraph k4 = complete(4);
  const Incidence inc4 = build_incidence(k4);
  const Assignment f{{6, 6, 5, 5}};
  EXPECT_EQ(inc4.objects[5], (CoverObject{2, 3}));
  const PackingCover c = cover_from_antifactor(k4, inc4, f);
  EXPECT_EQ(c.objects, (std::vector<CoverObject>{{2, 3}, {0, 1}}));
  EXPECT_TRUE(is_valid_cover(k4, c));
  EXPECT_THROW(cover_from_antifactor(g, inc, Assignment{{0, 1, 2}}), InputError);
}

TEST(Cover, Validation) {
  const GeneralGraph g = complete(4);
  EXPECT_TRUE(is_valid_cover(g, PackingCover{{{0, 1}, {2, 3}}}));
  EXPECT_FALSE(is_valid_cover(g, PackingCover{{{0, 1}}}));
  EXPECT_FALSE(is_valid_cover(g, PackingCover{{{0, 1}, {1, 2}, {3, 0}}}));
  EXPECT_FALSE(is_valid_cover(path3(), PackingCover{{{0, 1, 2}}}));
  EXPECT_FALSE(is_valid_cover(g, PackingCover{{{0}, {1, 2, 3}}}));
}

TEST(Cover, WriteFormat) {
  EXPECT_EQ(write_cover(PackingCover{{{0, 1}, {2, 3, 4}}}), "E 1 2\nT 3 4 5\n");
}

TEST(ReductionProperties, AgreesWithBruteForceAndRoundTrips) {
  int found = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 1 + static_cast<int>(seed % 10);
    const GeneralGraph g = gen::erdos_renyi(n, seed % 2 ? 0.5 : 0.3, seed);
    const PackResult r = pack_edges_triangles(g);
    ASSERT_EQ(r.cover.has_value(), brute_force_cover(g).has_value()) << write_cover(r.cover.value_or(PackingCover{}));
    if (!r.cover) continue;
    ++found;
    ASSERT_TRUE(is_valid_cover(g, *r.cover));
    const Incidence inc = build_incidence(g);
    // Load law: edges carry 0 or 2 clients, triangles 0, 2 or 3.
    std::vector<int> load(inc.objects.size(), 0);
    for (int y : r.outcome.assignment->target) ++load[y];
    for (std::size_t j = 0; j < load.size(); ++j) {
      if (inc.objects[j].size() == 2) EXPECT_TRUE(load[j] == 0 || load[j] == 2);
      if (inc.objects[j].size() == 3) EXPECT_TRUE(load[j] == 0 || load[j] == 2 || load[j] == 3);
    }
    const Assignment back = antifactor_from_cover(inc, *r.cover);
    EXPECT_TRUE(solver::verify_anti_factor(inc.graph, back));
    auto again = cover_from_antifactor(g, inc, back).objects;
    auto original = r.cover->objects;
    std::sort(again.begin(), again.end());
    std::sort(original.begin(), original.end());
    EXPECT_EQ(again, original);
  }
  EXPECT_GT(found, 50);
}

TEST(ReductionProperties, AntiFactorFromCoverRejectsUnknownObjects) {
  const Incidence inc = build_incidence(path3());
  EXPECT_THROW(antifactor_from_cover(inc, PackingCover{{{0, 1, 2}}}), InputError);
  EXPECT_THROW(antifactor_from_cover(inc, PackingCover{{{0, 1}}}), InputError);
}
