#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "antifactor/canonical.hpp"
#include "antifactor/errors.hpp"
#include "antifactor/generators.hpp"

using namespace antifactor;

namespace {

BipartiteGraph relabel(const BipartiteGraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> px(g.x_count()), py(g.y_count());
  std::iota(px.begin(), px.end(), 0);
  std::iota(py.begin(), py.end(), 0);
  std::shuffle(px.begin(), px.end(), rng);
  std::shuffle(py.begin(), py.end(), rng);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({px[e.x], py[e.y]});
  std::shuffle(edges.begin(), edges.end(), rng);
  return BipartiteGraph(g.x_count(), g.y_count(), edges);
}

}  // namespace

TEST(Canonical, InvariantUnderRelabeling) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const BipartiteGraph g = gen::random_bipartite(5, 6, 0.5, seed);
    EXPECT_EQ(canonical_form(g), canonical_form(relabel(g, seed + 1)));
  }
}

TEST(Canonical, RegularGraphsWithEqualInvariants) {
  // C_8 and two disjoint C_4 share every degree statistic.
  const BipartiteGraph c8 = gen::cycle(8);
  const BipartiteGraph two_c4(4, 4, {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {2, 2}, {3, 2}, {3, 3}, {2, 3}});
  EXPECT_NE(canonical_form(c8), canonical_form(two_c4));
  EXPECT_EQ(canonical_form(c8), canonical_form(relabel(c8, 4)));
}

TEST(Canonical, SidesAreNotInterchangeable) {
  const BipartiteGraph x_center(1, 3, {{0, 0}, {0, 1}, {0, 2}});
  const BipartiteGraph y_center(3, 1, {{0, 0}, {1, 0}, {2, 0}});
  EXPECT_NE(canonical_form(x_center), canonical_form(y_center));
}

TEST(Canonical, PermutationCap) {
  EXPECT_THROW(canonical_form(BipartiteGraph(9, 9, {}), 1000), ResourceError);
}
