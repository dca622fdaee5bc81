#include <gtest/gtest.h>

#include "autgraph/multigraph.hpp"
#include "autgraph/structure.hpp"
#include "oracle.hpp"

using namespace autgraph;

namespace {

Multigraph two_triangles() { return Multigraph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}); }

}  // namespace

TEST(Multigraph, RejectsLoopsAndBadVertices) {
  Multigraph g(2);
  EXPECT_THROW(g.add_edge(0, 0), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 2), std::out_of_range);
  EXPECT_THROW(Multigraph(0), std::invalid_argument);
}

TEST(Multigraph, EdgeIdsAreFreshAndDistinct) {
  Multigraph g(3);
  int a = g.add_edge(0, 1), b = g.add_edge(0, 1), c = g.add_edge(1, 2);
  EXPECT_NE(a, b);
  EXPECT_NE(b, c);
  EXPECT_EQ(g.multiplicity(0, 1), 2);
  EXPECT_EQ(g.multiplicity(1, 0), 2);
  EXPECT_EQ(g.degree(1), 3);
}

TEST(Multigraph, LegsAreUniqueAndSortedByLabel) {
  Multigraph g(2, {{0, 1}});
  g.add_leg(2, 1);
  g.add_leg(1, 0);
  EXPECT_THROW(g.add_leg(1, 1), std::invalid_argument);
  ASSERT_EQ(g.leg_count(), 2u);
  EXPECT_EQ(g.legs()[0].label, 1);
  EXPECT_EQ(g.leg_vertex(2), 1);
  EXPECT_FALSE(g.leg_vertex(3).has_value());
  g.move_leg(2, 0);
  EXPECT_EQ(g.legs_at(0).size(), 2u);
}

TEST(Multigraph, MoveEndRefusesToCreateLoop) {
  Multigraph g(3, {{0, 1}});
  EXPECT_THROW(g.move_end({0, 1}, 0), std::invalid_argument);
  g.move_end({0, 1}, 2);
  EXPECT_EQ(g.multiplicity(0, 2), 1);
}

TEST(Multigraph, RelabelingPreservesMultiplicities) {
  Multigraph g(3, {{0, 1}, {0, 1}, {1, 2}}, {{1, 2}});
  std::vector<Vertex> perm{2, 0, 1};
  auto h = g.relabeled(perm);
  EXPECT_EQ(h.multiplicity(2, 0), 2);
  EXPECT_EQ(h.multiplicity(0, 1), 1);
  EXPECT_EQ(h.leg_vertex(1), 1);
}

TEST(Cyclomatic, Examples) {
  EXPECT_EQ(cyclomatic_number(path_graph(2)), 0);
  EXPECT_EQ(cyclomatic_number(cycle_graph(3)), 1);
  EXPECT_EQ(cyclomatic_number(parallel_edges(2)), 1);
}

TEST(Connectivity, Examples) {
  EXPECT_TRUE(is_connected(cycle_graph(3)));
  EXPECT_FALSE(is_connected(Multigraph(4, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(is_connected(Multigraph(1)));
}

TEST(Blocks, TwoTrianglesSharingAVertex) {
  auto dec = block_decomposition(two_triangles());
  EXPECT_EQ(dec.blocks.size(), 2u);
  ASSERT_EQ(dec.cut_vertices.size(), 1u);
  EXPECT_EQ(dec.cut_vertices.front(), 0);
}

TEST(Blocks, TriangleAndPath) {
  auto tri = block_decomposition(cycle_graph(3));
  EXPECT_EQ(tri.blocks.size(), 1u);
  EXPECT_TRUE(tri.cut_vertices.empty());
  auto p3 = block_decomposition(path_graph(3));
  EXPECT_EQ(p3.blocks.size(), 2u);
  for (const auto& b : p3.blocks) EXPECT_EQ(b.edges.size(), 1u);
  ASSERT_EQ(p3.cut_vertices.size(), 1u);
  EXPECT_EQ(p3.cut_vertices.front(), 1);
}

TEST(Blocks, ParallelEdgesFormOneBlock) {
  auto dec = block_decomposition(Multigraph(3, {{0, 1}, {0, 1}, {1, 2}}));
  ASSERT_EQ(dec.blocks.size(), 2u);
  EXPECT_EQ(dec.blocks[0].edges.size(), 2u);
  EXPECT_EQ(block_cyclomatic_number(dec.blocks[0]), 1);
}

TEST(Blocks, SingleVertexAndDisconnected) {
  EXPECT_TRUE(block_decomposition(Multigraph(1)).blocks.empty());
  EXPECT_FALSE(is_biconnected(Multigraph(1)));
  EXPECT_FALSE(is_two_edge_connected(Multigraph(1)));
  EXPECT_THROW(block_decomposition(Multigraph(3, {{0, 1}})), std::invalid_argument);
}

TEST(Predicates, Examples) {
  EXPECT_TRUE(is_biconnected(parallel_edges(2)));
  EXPECT_TRUE(is_biconnected(path_graph(2)));
  EXPECT_FALSE(is_biconnected(path_graph(3)));
  EXPECT_FALSE(is_biconnected(two_triangles()));
  EXPECT_TRUE(is_two_edge_connected(Multigraph(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}})));
  EXPECT_FALSE(is_two_edge_connected(path_graph(3)));
  EXPECT_TRUE(is_two_edge_connected(cycle_graph(3)));
}

// Exhaustive comparison with direct vertex and edge removal on every
// connected multigraph with n <= 5 and up to 6 edges (legs are irrelevant).
TEST(Blocks, AgreesWithRemovalOracle) {
  int checked = 0;
  for (int n = 1; n <= 5; ++n)
    for (int m = n - 1; m <= std::min(6, n + 2); ++m)
      oracle::for_each_labeled(n, m, 0, [&](const oracle::Graph& og) {
        if (!oracle::connected(og)) return;
        const auto g = oracle::to_multigraph(og);
        ++checked;
        ASSERT_EQ(cyclomatic_number(g), static_cast<int>(g.edge_count()) - n + 1);
        ASSERT_EQ(is_biconnected(g), oracle::biconnected(og));
        ASSERT_EQ(is_two_edge_connected(g), oracle::two_edge_connected(og));
        // The single edge is a biconnected block and also a bridge.
        if (is_biconnected(g) && g.edge_count() > 1) {
          ASSERT_TRUE(is_two_edge_connected(g));
        }
        if (n < 2) return;
        const auto dec = block_decomposition(g);
        ASSERT_EQ(static_cast<int>(dec.blocks.size()), oracle::block_count(og));
        std::vector<int> owner(g.edge_count(), 0);
        std::vector<bool> covered(n, false);
        for (const auto& b : dec.blocks) {
          for (auto e : b.edges) ++owner[e];
          for (auto v : b.vertices) covered[v] = true;
          ASSERT_TRUE(is_biconnected(block_subgraph(g, b)));
        }
        for (int c : owner) ASSERT_EQ(c, 1);
        for (bool c : covered) ASSERT_TRUE(c);
        for (Vertex v = 0; v < n; ++v) {
          const bool cut = oracle::components(og, v) > 1;
          ASSERT_EQ(dec.is_cut_vertex(v), cut);
          ASSERT_EQ(dec.blocks_at[v].size() >= 2, cut);
        }
      });
  EXPECT_GT(checked, 1000);
}
