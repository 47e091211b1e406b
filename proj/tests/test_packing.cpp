#include "tripack/packing.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "support.hpp"
#include "tripack/bounds.hpp"
#include "tripack/errors.hpp"
#include "tripack/graph.hpp"
#include "tripack/partition.hpp"

using tripack::Graph;
using tripack::Triangle;

namespace {

Graph k122() {
  return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
}

}  // namespace

TEST(EdgeDisjoint, DetectsSharedEdges) {
  std::vector<Triangle> shared{{0, 1, 2}, {0, 1, 3}};
  EXPECT_FALSE(tripack::is_edge_disjoint(shared));
  std::vector<Triangle> disjoint{{0, 1, 2}, {0, 3, 4}};
  EXPECT_TRUE(tripack::is_edge_disjoint(disjoint));
  EXPECT_TRUE(tripack::is_edge_disjoint({}));
}

TEST(ResidueClasses, SplitsTrianglesByCliqueIndexSum) {
  Graph g = k122();
  auto p = tripack::build_greedy_partition(g);
  ASSERT_EQ(p.cliques, (std::vector<std::vector<int>>{{2, 4}, {0, 1, 3}}));
  auto classes = tripack::residue_classes(g, p);
  ASSERT_EQ(classes.size(), 2u);
  // vertex residues: 2,4 -> 0 and 0,1,3 -> 1
  EXPECT_EQ(classes[0], (std::vector<Triangle>{{0, 1, 4}, {0, 2, 3}}));
  EXPECT_EQ(classes[1], (std::vector<Triangle>{{0, 1, 3}, {0, 2, 4}}));
  for (const auto& cls : classes) EXPECT_TRUE(tripack::is_edge_disjoint(cls));
}

TEST(ResidueClasses, OctahedronSplitsEvenly) {
  Graph g = testsupport::octahedron();
  auto p = tripack::build_greedy_partition(g);
  auto classes = tripack::residue_classes(g, p);
  ASSERT_EQ(classes.size(), 2u);
  EXPECT_EQ(classes[0].size(), 4u);
  EXPECT_EQ(classes[1].size(), 4u);
  for (const auto& cls : classes) EXPECT_TRUE(tripack::is_edge_disjoint(cls));
}

TEST(ResidueClasses, EveryClassIsDisjointOnSmallGraphs) {
  for (int n = 0; n <= 6; ++n) {
    testsupport::for_all_graphs(n, [](const Graph& g) {
      if (!tripack::clique_number_at_most(g, 3)) return;
      auto p = tripack::build_greedy_partition(g);
      auto classes = tripack::residue_classes(g, p);
      std::int64_t covered = 0;
      std::int64_t largest = 0;
      for (const auto& cls : classes) {
        ASSERT_TRUE(tripack::is_edge_disjoint(cls));
        covered += static_cast<std::int64_t>(cls.size());
        largest = std::max(largest, static_cast<std::int64_t>(cls.size()));
      }
      std::int64_t t = tripack::triangle_count(g);
      ASSERT_EQ(covered, t);
      if (p.size() > 0) ASSERT_GE(largest, tripack::ceil_div(t, p.size()));
    });
  }
}

TEST(ResidueClasses, RejectsBadPartitions) {
  Graph c5 = testsupport::cycle_graph(5);
  tripack::GreedyPartition not_greedy{{{0}, {1}, {2}, {3}, {4}}};
  EXPECT_THROW(tripack::residue_classes(c5, not_greedy),
               tripack::PreconditionError);
}

TEST(ExtractPacking, RejectsGraphsWithK4) {
  Graph k4 = testsupport::complete_graph(4);
  auto p = tripack::build_greedy_partition(k4);
  EXPECT_THROW(tripack::extract_packing(k4, p), tripack::PreconditionError);
}

TEST(ExtractPacking, PicksTheLargestClassSmallestResidueFirst) {
  Graph g = k122();
  auto pk = tripack::extract_packing(g, tripack::build_greedy_partition(g));
  EXPECT_EQ(pk.triangles, (std::vector<Triangle>{{0, 1, 4}, {0, 2, 3}}));
  EXPECT_EQ(pk.size(), 2);

  Graph oct = testsupport::octahedron();
  auto opk = tripack::extract_packing(oct, tripack::build_greedy_partition(oct));
  EXPECT_EQ(opk.size(), 4);
  EXPECT_EQ(opk.triangles,
            (std::vector<Triangle>{{0, 2, 4}, {0, 3, 5}, {1, 2, 5}, {1, 3, 4}}));
  EXPECT_TRUE(tripack::is_edge_disjoint(opk.triangles));
}

TEST(ExtractPacking, MeetsTheSurplusBoundExhaustively) {
  for (int n = 0; n <= 6; ++n) {
    testsupport::for_all_graphs(n, [](const Graph& g) {
      if (!tripack::clique_number_at_most(g, 3)) return;
      auto pk = tripack::extract_packing(g, tripack::build_greedy_partition(g));
      ASSERT_TRUE(tripack::is_edge_disjoint(pk.triangles));
      ASSERT_GE(pk.size(), tripack::k_value(g).ceil());
    });
  }
}

TEST(ExtractPacking, TrianglesBelongToTheHost) {
  Graph g = testsupport::octahedron();
  auto pk = tripack::extract_packing(g, tripack::build_greedy_partition(g));
  for (const auto& t : pk.triangles) {
    EXPECT_TRUE(g.adjacent(t.v[0], t.v[1]));
    EXPECT_TRUE(g.adjacent(t.v[0], t.v[2]));
    EXPECT_TRUE(g.adjacent(t.v[1], t.v[2]));
  }
  EXPECT_EQ(pk.host, g);
}
