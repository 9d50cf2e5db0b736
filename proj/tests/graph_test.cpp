#include <gtest/gtest.h>

#include <random>
#include <set>

#include "qclique/graph.hpp"
#include "test_support.hpp"

using namespace qclique;
using namespace qclique::testing;

namespace {

std::vector<std::vector<Vertex>> as_vectors(const std::vector<VertexCombination>& cs) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& c : cs) out.push_back(c.vertices());
  return out;
}

}  // namespace

TEST(Combinations, FourChooseThreeInLexOrder) {
  EXPECT_EQ(as_vectors(combinations(4, 3)),
            (std::vector<std::vector<Vertex>>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
}

TEST(Combinations, EdgeCases) {
  EXPECT_EQ(as_vectors(combinations(3, 3)), (std::vector<std::vector<Vertex>>{{0, 1, 2}}));
  EXPECT_TRUE(combinations(2, 3).empty());
  EXPECT_THROW(combinations(3, 0), ArgumentError);
}

TEST(Combinations, CountAndOrderProperty) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      auto cs = combinations(n, k);
      ASSERT_EQ(cs.size(), binomial(n, k)) << n << "," << k;
      for (std::size_t i = 1; i < cs.size(); ++i) EXPECT_LT(cs[i - 1], cs[i]);
    }
  }
}

TEST(VertexCombination, RejectsUnsortedInput) {
  EXPECT_THROW(VertexCombination({2, 1}), ArgumentError);
  EXPECT_THROW(VertexCombination({1, 1}), ArgumentError);
}

TEST(Graph, ConstructionErrors) {
  EXPECT_THROW(Graph(0), ArgumentError);
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), ArgumentError);
  EXPECT_THROW(g.add_edge(0, 3), RangeError);
}

TEST(IsClique, DiamondTriples) {
  const auto g = diamond_graph();
  EXPECT_FALSE(is_clique(g, {0, 1, 2}));
  EXPECT_TRUE(is_clique(g, {0, 1, 3}));
  EXPECT_TRUE(is_clique(g, {0, 2, 3}));
  EXPECT_FALSE(is_clique(g, {1, 2, 3}));
}

TEST(EnumerateCliques, Examples) {
  auto diamond = enumerate_cliques(diamond_graph(), 3);
  ASSERT_EQ(diamond.size(), 2U);
  EXPECT_EQ(diamond[0].combination, (VertexCombination{0, 1, 3}));
  EXPECT_EQ(diamond[1].combination, (VertexCombination{0, 2, 3}));

  auto k4 = enumerate_cliques(Graph::complete(4), 4);
  ASSERT_EQ(k4.size(), 1U);
  EXPECT_EQ(k4[0].combination, (VertexCombination{0, 1, 2, 3}));

  EXPECT_TRUE(enumerate_cliques(Graph(4), 2).empty());
  EXPECT_TRUE(enumerate_cliques(Graph::complete(3), 4).empty());
}

TEST(EnumerateCliques, MatchesBruteForceOnAllSmallGraphs) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const std::uint64_t graphs = std::uint64_t{1} << binomial(n, 2);
    for (std::uint64_t code = 0; code < graphs; ++code) {
      const auto g = graph_from_code(n, code);
      for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::uint32_t> got;
        for (const auto& w : enumerate_cliques(g, k)) {
          std::uint32_t mask = 0;
          for (auto v : w.combination) mask |= 1U << v;
          got.push_back(mask);
        }
        auto want = brute_force_clique_masks(g, k);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        ASSERT_EQ(got, want) << "n=" << n << " code=" << code << " k=" << k;
      }
    }
  }
}

TEST(EnumerateCliques, MatchesBruteForceOnRandomSixVertexGraphs) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = random_graph(6, 0.6, rng);
    for (std::size_t k = 2; k <= 6; ++k)
      ASSERT_EQ(enumerate_cliques(g, k).size(), brute_force_clique_masks(g, k).size());
  }
}

TEST(MaxClique, Examples) {
  EXPECT_EQ(max_clique_classical(diamond_graph()).combination, (VertexCombination{0, 1, 3}));
  EXPECT_EQ(max_clique_classical(Graph::complete(4)).combination, (VertexCombination{0, 1, 2, 3}));
  EXPECT_EQ(max_clique_classical(square_k4_graph()).combination, (VertexCombination{2, 3, 4, 5}));
  EXPECT_EQ(max_clique_classical(Graph(3)).combination, (VertexCombination{0}));
}

TEST(MaxClique, SizeIsLargestBruteForceSize) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const auto g = random_graph(n, 0.5, rng);
    std::size_t best = 1;
    for (std::size_t k = 2; k <= n; ++k)
      if (!brute_force_clique_masks(g, k).empty()) best = k;
    const auto w = max_clique_classical(g);
    EXPECT_EQ(w.size(), best);
    if (best >= 2) {
      EXPECT_TRUE(is_clique(g, w.combination));
    }
  }
}

TEST(Encoding, Examples) {
  EXPECT_EQ(encode_combination({0, 1, 3}, 2), "000111");
  EXPECT_EQ(encode_combination({0, 2, 3}, 2), "001011");
  EXPECT_EQ(encode_combination({0, 1, 2, 3}, 2), "00011011");
  EXPECT_EQ(encode_combination({0, 1}, 1), "01");
  EXPECT_THROW(encode_combination({0, 4}, 2), RangeError);
}

TEST(Encoding, BitsPerVertex) {
  EXPECT_EQ(bits_per_vertex(1), 1U);
  EXPECT_EQ(bits_per_vertex(2), 1U);
  EXPECT_EQ(bits_per_vertex(3), 2U);
  EXPECT_EQ(bits_per_vertex(4), 2U);
  EXPECT_EQ(bits_per_vertex(5), 3U);
  EXPECT_EQ(bits_per_vertex(8), 3U);
  EXPECT_EQ(bits_per_vertex(9), 4U);
}

TEST(Encoding, InjectiveAndDecodable) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto b = bits_per_vertex(n);
    for (std::size_t k = 1; k <= n; ++k) {
      std::set<std::string> seen;
      for (const auto& c : combinations(n, k)) {
        const auto s = encode_combination(c, b);
        EXPECT_EQ(s.size(), k * b);
        EXPECT_TRUE(seen.insert(s).second) << s;
        EXPECT_EQ(decode_combination(s, k, b, n), c);
        std::uint32_t mask = 0;
        for (auto v : c) mask |= 1U << v;
        EXPECT_EQ(s, label_for_mask(mask, b));
      }
    }
  }
}

TEST(Encoding, DecodeRejectsInvalidStrings) {
  EXPECT_FALSE(decode_combination("0100", 2, 2, 4));  // 1 then 0: not ascending
  EXPECT_FALSE(decode_combination("0011", 2, 2, 3));  // vertex 3 with n = 3
  EXPECT_FALSE(decode_combination("001", 2, 2, 4));
}

TEST(GraphFormats, ParseEdgeList) {
  const auto g = parse_graph("# comment\n4;\n0-1, 0-2,0-3\n1-3,2-3\n", GraphFormat::EdgeList);
  EXPECT_EQ(g, diamond_graph());
  EXPECT_EQ(parse_graph("4;0-1,0-2,0-3,1-3,2-3", GraphFormat::EdgeList), diamond_graph());
}

TEST(GraphFormats, ParseAdjacencyMatrix) {
  EXPECT_EQ(parse_graph("0 1 1 1\n1 0 0 1\n1 0 0 1\n1 1 1 0\n", GraphFormat::AdjacencyMatrix), diamond_graph());
  // A one-directional entry still yields the undirected edge.
  EXPECT_EQ(parse_graph("0 1\n0 0\n", GraphFormat::AdjacencyMatrix), Graph::complete(2));
}

TEST(GraphFormats, ParseDimacs) {
  EXPECT_EQ(parse_graph("c x\np edge 4 5\ne 1 2\ne 1 3\ne 1 4\ne 2 4\ne 3 4\n", GraphFormat::Dimacs), diamond_graph());
}

TEST(GraphFormats, ErrorsCarryLineNumbers) {
  try {
    parse_graph("4;\n0-1\n0-x\n", GraphFormat::EdgeList);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3U);
  }
  try {
    parse_graph("4;\n2-2\n", GraphFormat::EdgeList);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2U);
    EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
  }
  EXPECT_THROW(parse_graph("3;\n0-3\n", GraphFormat::EdgeList), RangeError);
  EXPECT_THROW(parse_graph("0 1\n1 1\n", GraphFormat::AdjacencyMatrix), ParseError);
  EXPECT_THROW(parse_graph("0 1 0\n1 0\n0 0 0\n", GraphFormat::AdjacencyMatrix), ParseError);
  EXPECT_THROW(parse_graph("p edge 3 1\ne 0 1\n", GraphFormat::Dimacs), RangeError);
  EXPECT_THROW(parse_graph("e 1 2\n", GraphFormat::Dimacs), ParseError);
  EXPECT_THROW(parse_graph("0-1\n", GraphFormat::EdgeList), ParseError);
}

TEST(GraphFormats, RoundTripProperty) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_graph(1 + trial % 9, 0.4, rng);
    for (auto f : {GraphFormat::EdgeList, GraphFormat::AdjacencyMatrix, GraphFormat::Dimacs}) {
      const auto text = serialize_graph(g, f);
      EXPECT_EQ(parse_graph(text, f), g) << to_string(f) << "\n" << text;
      EXPECT_EQ(detect_graph_format("graph.txt", text), f) << text;
    }
  }
}

TEST(GraphFormats, DetectByExtension) {
  EXPECT_EQ(detect_graph_format("a.el", ""), GraphFormat::EdgeList);
  EXPECT_EQ(detect_graph_format("a.adj", ""), GraphFormat::AdjacencyMatrix);
  EXPECT_EQ(detect_graph_format("a.col", ""), GraphFormat::Dimacs);
  EXPECT_EQ(graph_format_from_name("dimacs"), GraphFormat::Dimacs);
  EXPECT_FALSE(graph_format_from_name("gml"));
}

TEST(Graph, HashDistinguishesGraphs) {
  EXPECT_EQ(diamond_graph().hash(), diamond_graph().hash());
  EXPECT_NE(diamond_graph().hash(), Graph::complete(4).hash());
  EXPECT_NE(Graph(3).hash(), Graph(4).hash());
}
