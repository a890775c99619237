// Copyright 2026 The Ricci Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <numeric>

#include "ricci/errors.h"
#include "ricci/generators.h"
#include "ricci/graph.h"
#include "support/oracles.h"

namespace ricci {
namespace {

Graph Make(std::initializer_list<Edge> edges, std::initializer_list<VertexId> extra = {}) {
  std::vector<Edge> e(edges);
  std::vector<VertexId> x(extra);
  return Graph::FromEdges(e, x);
}

TEST(GraphTest, NormalizesAndDeduplicatesEdges) {
  const Graph g = Make({{3, 1}, {1, 3}, {2, 1}});
  ASSERT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(g.edges()[0], Edge(1, 2));
  EXPECT_EQ(g.edges()[1], Edge(1, 3));
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.degree(*g.node_index(1)), 2u);
}

TEST(GraphTest, RejectsSelfLoops) {
  EXPECT_THROW(Make({{4, 4}}), DomainError);
}

TEST(GraphTest, KeepsIsolatedVertices) {
  const Graph g = Make({{1, 2}}, {9, 5});
  EXPECT_EQ(g.num_vertices(), 4u);
  EXPECT_EQ(g.degree(*g.node_index(9)), 0u);
  EXPECT_EQ(g.vertices().back(), 9u);
}

TEST(GraphTest, EdgeLookup) {
  const Graph g = Make({{1, 2}, {2, 3}});
  EXPECT_TRUE(g.has_edge({3, 2}));
  EXPECT_FALSE(g.has_edge({1, 3}));
  EXPECT_THROW(g.require_edge({1, 3}), ContractViolation);
  EXPECT_THROW(g.require_node(7), ContractViolation);
}

TEST(GraphTest, RemoveEdgeFromTriangleLeavesPath) {
  const Graph k3 = Make({{1, 2}, {2, 3}, {1, 3}});
  const Graph path = k3.RemoveEdge({1, 3});
  EXPECT_EQ(path, Make({{1, 2}, {2, 3}}));
  EXPECT_THROW(path.RemoveEdge({1, 3}), ContractViolation);
}

TEST(GraphTest, RemoveOnlyEdgeKeepsEndpoints) {
  const Graph g = Make({{4, 7}}).RemoveEdge({4, 7});
  EXPECT_EQ(g.num_edges(), 0u);
  EXPECT_EQ(g.num_vertices(), 2u);
}

TEST(GraphTest, RemoveEdgeFromSbmDropsOneEdge) {
  const LabeledGraph s = StochasticBlockModel(3, 10, 0.5, 0.1, 4);
  const Edge e = s.graph.edges()[s.graph.num_edges() / 2];
  const Graph h = s.graph.RemoveEdge(e);
  EXPECT_EQ(h.num_edges() + 1, s.graph.num_edges());
  EXPECT_FALSE(h.has_edge(e));
  EXPECT_EQ(h.num_vertices(), s.graph.num_vertices());
}

TEST(ComponentsTest, PathIsOneComponent) {
  const Partition p = ConnectedComponents(Make({{1, 2}, {2, 3}}));
  EXPECT_EQ(std::vector<int>(p.labels().begin(), p.labels().end()),
            (std::vector<int>{0, 0, 0}));
}

TEST(ComponentsTest, TwoTriangles) {
  const Partition p =
      ConnectedComponents(Make({{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}}));
  EXPECT_EQ(std::vector<int>(p.labels().begin(), p.labels().end()),
            (std::vector<int>{0, 0, 0, 1, 1, 1}));
}

TEST(ComponentsTest, MatchesReachabilityOracle) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::RandomGraph(rng, 1, 20, 18);
    const Partition p = ConnectedComponents(g);
    const auto d = testing::FloydWarshall(g);
    for (std::size_t i = 0; i < g.num_vertices(); ++i) {
      for (std::size_t j = 0; j < g.num_vertices(); ++j) {
        EXPECT_EQ(p.labels()[i] == p.labels()[j], d[i][j] >= 0);
      }
    }
  }
}

TEST(BfsTest, PathDistances) {
  const Graph g = Make({{1, 2}, {2, 3}, {3, 4}});
  const VertexId src[] = {1};
  const auto d = BfsDistances(g, src, 3);
  EXPECT_EQ(d.at({1, 4}), 3);
  EXPECT_EQ(d.at({1, 1}), 0);
  const auto d2 = BfsDistances(g, src, 2);
  EXPECT_FALSE(d2.contains({1, 4}));
}

TEST(BfsTest, MatchesAllPairsOracle) {
  testing::Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testing::RandomGraph(rng, 2, 16, 30);
    const auto oracle = testing::FloydWarshall(g);
    std::vector<VertexId> all(g.vertices().begin(), g.vertices().end());
    for (int radius : {0, 1, 2, 3, 16}) {
      const auto d = BfsDistances(g, all, radius);
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = 0; j < all.size(); ++j) {
          const int want = oracle[i][j];
          const auto it = d.find({all[i], all[j]});
          if (want >= 0 && want <= radius) {
            ASSERT_NE(it, d.end());
            EXPECT_EQ(it->second, want);
          } else {
            EXPECT_EQ(it, d.end());
          }
        }
      }
    }
  }
}

TEST(PartitionTest, LabelsAndCommunities) {
  const Partition p({1, 2, 5, 9}, {7, 3, 7, 3});
  EXPECT_EQ(p.label(5), 7);
  EXPECT_THROW(p.label(4), ContractViolation);
  EXPECT_EQ(p.num_communities(), 2);
  const auto c = p.Communities();
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], (std::vector<VertexId>{1, 5}));
  EXPECT_EQ(c[1], (std::vector<VertexId>{2, 9}));
  EXPECT_EQ(p.Normalized(), Partition({1, 2, 5, 9}, {0, 1, 0, 1}));
}

TEST(RelabelTest, PreservesStructure) {
  testing::Rng rng(13);
  const Graph g = testing::RandomGraph(rng, 8, 8, 12);
  const auto mapping = testing::RandomRelabeling(rng, g);
  const Graph h = RelabelVertices(g, mapping);
  ASSERT_EQ(h.num_edges(), g.num_edges());
  for (const Edge& e : g.edges()) EXPECT_TRUE(h.has_edge({mapping.at(e.u), mapping.at(e.v)}));
}

}  // namespace
}  // namespace ricci
