#include "tripack/partition.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "support.hpp"
#include "tripack/errors.hpp"
#include "tripack/graph.hpp"

using tripack::Ggp;
using tripack::Graph;
using tripack::GreedyPartition;

using Blocks = std::vector<std::vector<int>>;

TEST(GreedyBuild, WorkedExamples) {
  auto c5 = tripack::build_greedy_partition(testsupport::cycle_graph(5));
  EXPECT_EQ(c5.cliques, (Blocks{{4}, {0, 1}, {2, 3}}));
  EXPECT_EQ(c5.size(), 3);

  // complete tripartite with parts {0}, {1,2}, {3,4}
  Graph k122(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  auto p122 = tripack::build_greedy_partition(k122);
  EXPECT_EQ(p122.cliques, (Blocks{{2, 4}, {0, 1, 3}}));

  auto k33 = tripack::build_greedy_partition(testsupport::complete_bipartite(3, 3));
  EXPECT_EQ(k33.cliques, (Blocks{{0, 3}, {1, 4}, {2, 5}}));

  auto oct = tripack::build_greedy_partition(testsupport::octahedron());
  EXPECT_EQ(oct.cliques, (Blocks{{0, 2, 4}, {1, 3, 5}}));

  auto kn = tripack::build_greedy_partition(testsupport::complete_graph(4));
  EXPECT_EQ(kn.cliques, (Blocks{{0, 1, 2, 3}}));

  auto empty = tripack::build_greedy_partition(Graph(0));
  EXPECT_EQ(empty.size(), 0);

  auto isolated = tripack::build_greedy_partition(Graph(3));
  EXPECT_EQ(isolated.cliques, (Blocks{{0}, {1}, {2}}));
}

TEST(GreedyValidate, AcceptsBuiltPartitionEverywhere) {
  for (int n = 0; n <= 6; ++n) {
    testsupport::for_all_graphs(n, [n](const Graph& g) {
      auto p = tripack::build_greedy_partition(g);
      ASSERT_TRUE(tripack::validate_greedy(g, p));
      ASSERT_EQ(p.size() >= 1, n >= 1);
    });
  }
}

TEST(GreedyValidate, RejectsPropertyViolations) {
  Graph c5 = testsupport::cycle_graph(5);
  // not cliques
  EXPECT_FALSE(tripack::validate_greedy(c5, {Blocks{{0, 2}, {1, 3, 4}}}));
  // sizes decrease
  EXPECT_FALSE(tripack::validate_greedy(c5, {Blocks{{0, 1}, {4}, {2, 3}}}));
  // prefix condition broken: the full triangle is left for last
  Graph k3 = testsupport::complete_graph(3);
  EXPECT_FALSE(tripack::validate_greedy(k3, {Blocks{{0}, {1}, {2}}}));
  EXPECT_TRUE(tripack::validate_greedy(k3, {Blocks{{0, 1, 2}}}));
}

TEST(GreedyValidate, ThrowsOnMalformedCover) {
  Graph c5 = testsupport::cycle_graph(5);
  EXPECT_THROW(tripack::validate_greedy(c5, {Blocks{{4}, {0, 1}}}),
               tripack::StructureError);
  EXPECT_THROW(tripack::validate_greedy(c5, {Blocks{{4}, {0, 1}, {2, 3}, {4}}}),
               tripack::StructureError);
  EXPECT_THROW(tripack::validate_greedy(c5, {Blocks{{4}, {0, 1}, {2, 3, 5}}}),
               tripack::StructureError);
  EXPECT_THROW(tripack::validate_greedy(c5, {Blocks{{}, {0, 1, 2, 3, 4}}}),
               tripack::StructureError);
}

TEST(GgpShape, SizeCountsBiggestPartPlusTail) {
  Ggp p;
  p.head_parts = {{0, 1}, {2}};
  p.tail_cliques = {{3, 4}, {5, 6, 7}};
  EXPECT_EQ(tripack::ggp_size(p), 4);
  EXPECT_EQ(tripack::ggp_size(Ggp{}), 0);
}

TEST(GgpShape, FromGreedyKeepsSize) {
  Graph c5 = testsupport::cycle_graph(5);
  auto p = tripack::build_greedy_partition(c5);
  Ggp g = tripack::ggp_from_greedy(p);
  EXPECT_EQ(g.head_parts, (Blocks{{4}}));
  EXPECT_EQ(g.tail_cliques, (Blocks{{0, 1}, {2, 3}}));
  EXPECT_EQ(tripack::ggp_size(g), p.size());
  EXPECT_TRUE(tripack::validate_ggp(c5, g));
}

TEST(GgpShape, ValidatesBlowUpStructure) {
  // K4 minus the edge {0,1}: {0,1} is a symmetric independent part but the
  // prefix with tail {2,3} contains a triangle, so this is not a ggp.
  Graph g(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  Ggp bad;
  bad.head_parts = {{0, 1}};
  bad.tail_cliques = {{2, 3}};
  EXPECT_FALSE(tripack::validate_ggp(g, bad));

  // complete tripartite {0},{1,2},{3,4} as a pure head: a valid blow-up
  Graph k122(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  Ggp head_only;
  head_only.head_parts = {{0}, {1, 2}, {3, 4}};
  EXPECT_TRUE(tripack::validate_ggp(k122, head_only));
  EXPECT_EQ(tripack::ggp_size(head_only), 2);

  // parts must have identical neighborhoods
  Graph path4 = testsupport::path_graph(4);
  Ggp asym;
  asym.head_parts = {{0, 2}};
  asym.tail_cliques = {{1}, {3}};
  EXPECT_FALSE(tripack::validate_ggp(path4, asym));

  // more head parts than |C_1| is rejected
  Graph k2(2, {{0, 1}});
  Ggp wide;
  wide.head_parts = {{0}, {1}};
  EXPECT_TRUE(tripack::validate_ggp(k2, wide));
  Graph k21(3, {{0, 1}});
  Ggp wide_tail;
  wide_tail.head_parts = {{0}, {1}};
  wide_tail.tail_cliques = {{2}};
  EXPECT_FALSE(tripack::validate_ggp(k21, wide_tail));
}

TEST(ContractHead, CollapsesPartsToSingleVertices) {
  Graph k122(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
  Ggp p;
  p.head_parts = {{0}, {1, 2}, {3, 4}};
  auto c = tripack::contract_head(k122, p);
  EXPECT_EQ(c.graph, testsupport::complete_graph(3));
  EXPECT_EQ(c.partition.cliques, (Blocks{{0, 1, 2}}));
  EXPECT_EQ(c.groups, (Blocks{{0}, {1, 2}, {3, 4}}));
}

TEST(ContractHead, KeepsTailAndRelabels) {
  // complete bipartite 3+3 with head parts {0,1} and {3,4}, tail {2,5}
  Graph k33 = testsupport::complete_bipartite(3, 3);
  Ggp p;
  p.head_parts = {{0, 1}, {3, 4}};
  p.tail_cliques = {{2, 5}};
  ASSERT_TRUE(tripack::validate_ggp(k33, p));
  auto c = tripack::contract_head(k33, p);
  // new ids: {0,1} -> 0, {3,4} -> 1, then 2 -> 2, 5 -> 3: a four-cycle
  EXPECT_EQ(c.graph, testsupport::make_graph(4, {{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
  EXPECT_EQ(c.partition.cliques, (Blocks{{0, 1}, {2, 3}}));
  EXPECT_EQ(c.groups, (Blocks{{0, 1}, {3, 4}, {2}, {5}}));
  EXPECT_TRUE(tripack::validate_greedy(c.graph, c.partition));
}

TEST(ContractHead, RejectsInvalidGgp) {
  Graph path4 = testsupport::path_graph(4);
  Ggp asym;
  asym.head_parts = {{0, 2}};
  asym.tail_cliques = {{1}, {3}};
  EXPECT_THROW(tripack::contract_head(path4, asym), tripack::PreconditionError);
}
