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

#include "ricci/forman.h"

#include <cstdlib>

#include "ricci/errors.h"

namespace ricci {
namespace {

void RequireMatchingCensus(const Graph& g, const CycleCensus& census) {
  if (census.num_nodes() != g.num_vertices() ||
      census.num_live_edges() != g.num_edges() ||
      census.num_edge_slots() != g.num_edges()) {
    throw ContractViolation("cycle census was not built on this graph");
  }
}

int Frc(const Graph& g, NodePair p) {
  return 4 - static_cast<int>(g.degree(p.first)) -
         static_cast<int>(g.degree(p.second));
}

}  // namespace

int FormanCurvature(const Graph& g, const Edge& e) {
  return Frc(g, g.edge_nodes()[g.require_edge(e)]);
}

CurvatureVector FormanAll(const Graph& g) {
  CurvatureVector cv;
  cv.method = CurvatureMethod::kFrc;
  cv.edges.assign(g.edges().begin(), g.edges().end());
  cv.values.reserve(g.num_edges());
  for (NodePair p : g.edge_nodes()) cv.values.push_back(Frc(g, p));
  return cv;
}

int AugmentedFormanFromAggregates(int frc, const CycleCensus& census,
                                  EdgeIndex e) {
  return frc - census.cycle_count(e) + 2 * census.shared_neighbor_count(e) -
         census.nonadjacent_imbalance(e);
}

int AugmentedForman(const Graph& g, const CycleCensus& census, const Edge& e) {
  RequireMatchingCensus(g, census);
  const EdgeIndex idx = g.require_edge(e);
  return AugmentedFormanFromAggregates(Frc(g, g.edge_nodes()[idx]), census, idx);
}

int AugmentedFormanFaceForm(const Graph& g, const CycleCensus& census,
                            const Edge& e) {
  RequireMatchingCensus(g, census);
  const EdgeIndex idx = g.require_edge(e);
  const NodePair p = g.edge_nodes()[idx];

  int value = 2 + census.gamma(idx, idx);
  for (NodeIndex end : {p.first, p.second}) {
    for (NodeIndex other : g.neighbors(end)) {
      const NodePair q(end, other);
      if (q == p) continue;
      const EdgeIndex f = *g.edge_index(q);
      value -= std::abs(census.gamma(idx, f) + census.gamma(f, idx) - 1);
    }
  }
  for (const auto& [f, counts] : census.nonadjacent_pairs(idx)) {
    value -= std::abs(census.gamma(idx, f) - census.gamma(f, idx));
  }
  return value;
}

CurvatureVector AugmentedFormanAll(const Graph& g, int max_cycle_length) {
  const CycleCensus census = CycleCensus::Build(g, max_cycle_length);
  CurvatureVector cv;
  cv.method = AfrcMethod(max_cycle_length);
  cv.edges.assign(g.edges().begin(), g.edges().end());
  cv.values.reserve(g.num_edges());
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const auto idx = static_cast<EdgeIndex>(i);
    cv.values.push_back(
        AugmentedFormanFromAggregates(Frc(g, g.edge_nodes()[idx]), census, idx));
  }
  return cv;
}

}  // namespace ricci
