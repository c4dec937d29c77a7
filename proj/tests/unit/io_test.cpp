#include <gtest/gtest.h>

#include "antifactor/errors.hpp"
#include "antifactor/generators.hpp"
#include "antifactor/io.hpp"

using namespace antifactor;

TEST(GraphText, WritesHeaderAndOneBasedEdges) {
  const BipartiteGraph g(2, 1, {{1, 0}, {0, 0}});
  EXPECT_EQ(write_graph(g), "p bip 2 1 2\ne 2 1\ne 1 1\n");
}

TEST(GraphText, ParsesCommentsAndBlankLines) {
  const BipartiteGraph g = read_graph("c hello\n\np bip 2 2 2\ne 1 1\n  e 2 2  \n");
  EXPECT_EQ(g, BipartiteGraph(2, 2, {{0, 0}, {1, 1}}));
}

TEST(GraphText, RoundTripsRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const BipartiteGraph g = gen::random_bipartite(5, 7, 0.4, seed);
    const std::string text = write_graph(g);
    EXPECT_EQ(read_graph(text), g);
    EXPECT_EQ(write_graph(read_graph(text)), text);
  }
}

TEST(GraphText, ErrorsNameTheLine) {
  auto message = [](const std::string& text) {
    try {
      read_graph(text);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_EQ(message("e 1 1\n"), "line 1: edge before header");
  EXPECT_EQ(message("p bip 1 1 1\ne 1 2\n"), "line 2: edge index out of range");
  EXPECT_EQ(message("p bip 1 1 1\ne 1 x\n"), "line 2: expected an integer, got 'x'");
  EXPECT_EQ(message("p bip 1 1 2\ne 1 1\n"), "header announces 2 edges, found 1");
  EXPECT_EQ(message("p gen 1 1\n"), "line 1: expected 'p bip NX NY M'");
  EXPECT_EQ(message("q\n"), "line 1: unknown line type 'q'");
  EXPECT_EQ(message(""), "missing 'p bip NX NY M' header");
  EXPECT_THROW(read_graph("p bip 1 1 2\ne 1 1\ne 1 1\n"), InputError);
}

TEST(SpecJson, DefaultsAndOverrides) {
  const BipartiteGraph g = complete_bipartite(2, 2);
  const auto doc = nlohmann::json::parse(R"({
    "x_default": [-1, 1],
    "y_default": {"base": [0], "tail_from": 2},
    "overrides": [{"side": "y", "index": 2, "set": [1]}]
  })");
  const DegreeSpec spec = read_spec(doc, g);
  EXPECT_EQ(spec.at(x_vertex(1)), DegreeSet({-1, 1}));
  EXPECT_EQ(spec.at(y_vertex(0)), DegreeSet::not_one());
  EXPECT_EQ(spec.at(y_vertex(1)), DegreeSet::exactly(1));
}

TEST(SpecJson, RejectsMalformedDocuments) {
  const BipartiteGraph g = complete_bipartite(2, 2);
  EXPECT_THROW(read_spec(nlohmann::json::parse(R"({"x_default": [1]})"), g), InputError);
  EXPECT_THROW(read_spec(nlohmann::json::parse(R"({"x_default": [], "y_default": [0]})"), g), InputError);
  EXPECT_THROW(read_spec(nlohmann::json::parse(
                   R"({"x_default": [1], "y_default": [0], "overrides": [{"side": "y", "index": 3, "set": [1]}]})"),
                         g),
               InputError);
  EXPECT_THROW(read_spec(nlohmann::json::parse(R"({"x_default": "one", "y_default": [0]})"), g), InputError);
}

TEST(SpecJson, SetRoundTrip) {
  const DegreeSet s({0, 3}, 5);
  EXPECT_EQ(degree_set_from_json(to_json(s)), s);
  EXPECT_EQ(degree_set_from_json(to_json(DegreeSet({-1, 1}))), DegreeSet({-1, 1}));
}

TEST(GeneralGraphText, RoundTripAndErrors) {
  const GeneralGraph g(4, {{0, 1}, {2, 1}, {3, 0}});
  const std::string text = write_general_graph(g);
  EXPECT_EQ(text, "p gen 4 3\ne 1 2\ne 2 3\ne 1 4\n");
  EXPECT_EQ(read_general_graph(text), g);
  EXPECT_THROW(read_general_graph("p gen 2 1\ne 1 1\n"), InputError);
  EXPECT_THROW(read_general_graph("p gen 2 2\ne 1 2\ne 2 1\n"), InputError);
  EXPECT_THROW(read_general_graph("p gen 2 1\ne 1 3\n"), InputError);
}
