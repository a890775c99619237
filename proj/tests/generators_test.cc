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

#include <cmath>

#include "ricci/errors.h"
#include "ricci/forman.h"
#include "ricci/generators.h"
#include "support/oracles.h"

namespace ricci {
namespace {

int CountWithin(const LabeledGraph& s) {
  int within = 0;
  for (const Edge& e : s.graph.edges()) within += s.truth.label(e.u) == s.truth.label(e.v);
  return within;
}

// Mean over `seeds` samples must lie within 5 standard errors of the
// binomial mean.
void ExpectBinomialMean(const std::vector<double>& counts, double trials, double p) {
  double sum = 0;
  for (double c : counts) sum += c;
  const double mean = sum / counts.size();
  const double se = std::sqrt(trials * p * (1 - p) / counts.size());
  EXPECT_NEAR(mean, trials * p, 5 * se + 1e-12);
}

bool IsBipartite(const Graph& g, const Partition& sides) {
  for (const Edge& e : g.edges()) {
    if (sides.label(e.u) == sides.label(e.v)) return false;
  }
  return true;
}

TEST(GeneratorsTest, Deterministic) {
  EXPECT_EQ(ErdosRenyi(60, 0.1, 9), ErdosRenyi(60, 0.1, 9));
  EXPECT_NE(ErdosRenyi(60, 0.1, 9), ErdosRenyi(60, 0.1, 10));
  const LabeledGraph a = HierarchicalBipartite(10, 0.5, 0.1, 3);
  const LabeledGraph b = HierarchicalBipartite(10, 0.5, 0.1, 3);
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_EQ(a.truth, b.truth);
  EXPECT_EQ(TreeStochasticBlockModel(3, 8, 0.2, 0.05, 4).graph,
            TreeStochasticBlockModel(3, 8, 0.2, 0.05, 4).graph);
}

TEST(GeneratorsTest, ErdosRenyiExtremes) {
  const Graph empty = ErdosRenyi(7, 0.0, 1);
  EXPECT_EQ(empty.num_vertices(), 7u);
  EXPECT_EQ(empty.num_edges(), 0u);
  EXPECT_EQ(ErdosRenyi(7, 1.0, 1).num_edges(), 21u);
  EXPECT_THROW(ErdosRenyi(0, 0.5, 1), DomainError);
  EXPECT_THROW(ErdosRenyi(5, 1.5, 1), DomainError);
}

TEST(GeneratorsTest, ErdosRenyiEdgeCount) {
  std::vector<double> counts;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    counts.push_back(static_cast<double>(ErdosRenyi(1000, 0.003, seed).num_edges()));
  }
  ExpectBinomialMean(counts, 1000.0 * 999 / 2, 0.003);
}

TEST(GeneratorsTest, BipartiteErdosRenyi) {
  EXPECT_EQ(BipartiteErdosRenyi(4, 1.0, 1).num_edges(), 16u);
  std::vector<double> counts;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = BipartiteErdosRenyi(40, 0.1, seed);
    EXPECT_EQ(g.num_vertices(), 80u);
    for (int t : testing::TrianglesPerEdge(g)) EXPECT_EQ(t, 0);
    EXPECT_EQ(AugmentedFormanAll(g, 3).values, FormanAll(g).values);
    counts.push_back(static_cast<double>(g.num_edges()));
  }
  ExpectBinomialMean(counts, 1600, 0.1);
}

TEST(GeneratorsTest, SbmTwoTriangles) {
  const LabeledGraph s = StochasticBlockModel(2, 3, 1.0, 0.0, 1);
  EXPECT_EQ(s.graph.num_edges(), 6u);
  EXPECT_EQ(std::vector<int>(s.truth.labels().begin(), s.truth.labels().end()),
            (std::vector<int>{0, 0, 0, 1, 1, 1}));
  EXPECT_EQ(CountWithin(s), 6);
  EXPECT_THROW(StochasticBlockModel(2, 3, 0.1, 0.2, 1), DomainError);
}

TEST(GeneratorsTest, SbmWithinEdgeCount) {
  std::vector<double> within, between;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const LabeledGraph s = StochasticBlockModel(10, 20, 0.7, 0.05, seed);
    EXPECT_EQ(s.graph.num_vertices(), 200u);
    const int w = CountWithin(s);
    within.push_back(w);
    between.push_back(static_cast<double>(s.graph.num_edges()) - w);
  }
  ExpectBinomialMean(within, 10 * 190, 0.7);
  ExpectBinomialMean(between, 200.0 * 199 / 2 - 1900, 0.05);
}

TEST(GeneratorsTest, SbmWithEqualProbabilitiesMatchesErdosRenyi) {
  std::vector<double> sbm, er;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    sbm.push_back(static_cast<double>(StochasticBlockModel(4, 25, 0.05, 0.05, seed).graph.num_edges()));
    er.push_back(static_cast<double>(ErdosRenyi(100, 0.05, seed + 1000).num_edges()));
  }
  ExpectBinomialMean(sbm, 4950, 0.05);
  ExpectBinomialMean(er, 4950, 0.05);
  double ms = 0, me = 0;
  for (std::size_t i = 0; i < sbm.size(); ++i) {
    ms += sbm[i];
    me += er[i];
  }
  // Two-sample difference of means within 5 standard errors.
  const double se = std::sqrt(2 * 4950 * 0.05 * 0.95 / sbm.size());
  EXPECT_NEAR(ms / sbm.size(), me / er.size(), 5 * se);
}

TEST(GeneratorsTest, TreeSbm) {
  const LabeledGraph forest = TreeStochasticBlockModel(4, 9, 0.0, 0.0, 2);
  EXPECT_EQ(forest.graph.num_edges(), 4u * 8u);
  EXPECT_EQ(ConnectedComponents(forest.graph).Normalized(), forest.truth.Normalized());
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const LabeledGraph s = TreeStochasticBlockModel(3, 12, 0.1, 0.0, seed);
    // With no between edges the components are exactly the communities.
    EXPECT_EQ(ConnectedComponents(s.graph).Normalized(), s.truth.Normalized());
  }
  // No q <= p requirement here.
  EXPECT_NO_THROW(TreeStochasticBlockModel(2, 5, 0.0, 0.03, 1));
}

TEST(GeneratorsTest, TreeSbmExtraEdgeCount) {
  std::vector<double> extra;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const LabeledGraph s = TreeStochasticBlockModel(2, 20, 0.2, 0.0, seed);
    extra.push_back(static_cast<double>(s.graph.num_edges()) - 2 * 19);
  }
  ExpectBinomialMean(extra, 2 * (190 - 19), 0.2);
}

TEST(GeneratorsTest, HierarchicalBipartite) {
  const LabeledGraph full = HierarchicalBipartite(5, 1.0, 0.0, 1);
  EXPECT_EQ(full.graph.num_vertices(), 20u);
  EXPECT_EQ(full.graph.num_edges(), 50u);
  EXPECT_EQ(ConnectedComponents(full.graph).Normalized(), full.truth.Normalized());
  EXPECT_THROW(HierarchicalBipartite(5, 0.1, 0.2, 1), DomainError);

  std::vector<double> counts;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const LabeledGraph s = HierarchicalBipartite(50, 0.5, 0.05, seed);
    EXPECT_EQ(s.graph.num_vertices(), 200u);
    EXPECT_EQ(s.truth.num_communities(), 2);
    // Odd cycles would need an edge inside one side of the bipartition; a
    // 2-colouring by BFS certifies there are none.
    const auto d = testing::FloydWarshall(s.graph);
    std::vector<VertexId> ids(s.graph.vertices().begin(), s.graph.vertices().end());
    std::vector<int> colour(ids.size(), 0);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      int root = -1;
      for (std::size_t j = 0; j <= i; ++j) {
        if (d[i][j] >= 0) {
          root = static_cast<int>(j);
          break;
        }
      }
      colour[i] = d[i][root] % 2;
    }
    EXPECT_TRUE(IsBipartite(s.graph, Partition(ids, colour)));
    counts.push_back(static_cast<double>(s.graph.num_edges()));
  }
  double sum = 0;
  for (double c : counts) sum += c;
  // 2 * 50 * 50 within pairs at 0.5, 2 * 50 * 50 between pairs at 0.05.
  const double mean = 2500 + 250;
  const double var = 5000 * 0.25 + 5000 * 0.05 * 0.95;
  EXPECT_NEAR(sum / counts.size(), mean, 5 * std::sqrt(var / counts.size()));
}

TEST(GeneratorsTest, ModelDispatch) {
  EXPECT_EQ(ParseModel("tsbm"), GraphModel::kTreeSbm);
  EXPECT_FALSE(ParseModel("nope").has_value());
  ModelParams params;
  params.model = GraphModel::kSbm;
  params.l = 3;
  params.k = 4;
  params.p = 0.5;
  params.q = 0.1;
  params.seed = 8;
  const GeneratedGraph g = Generate(params);
  EXPECT_EQ(g.graph, StochasticBlockModel(3, 4, 0.5, 0.1, 8).graph);
  ASSERT_TRUE(g.truth.has_value());
  params.model = GraphModel::kEr;
  params.n = 5;
  EXPECT_FALSE(Generate(params).truth.has_value());
}

}  // namespace
}  // namespace ricci
