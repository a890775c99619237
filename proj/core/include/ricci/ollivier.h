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

#ifndef RICCI_OLLIVIER_H_
#define RICCI_OLLIVIER_H_

#include <vector>

#include "ricci/curvature.h"
#include "ricci/graph.h"
#include "ricci/transport.h"

namespace ricci {

// Probability measure on a finite set of vertices.
struct DiscreteMeasure {
  std::vector<VertexId> support;
  std::vector<double> mass;
};

struct TransportProblem {
  DiscreteMeasure supply;
  DiscreteMeasure demand;
  CostMatrix cost;  // supply.support x demand.support ground distances
};

// Uniform measure on the neighbours of v (no mass on v itself).
// Throws DomainError for an isolated vertex.
DiscreteMeasure NeighborMeasure(const Graph& g, VertexId v);

// Transport problem between the neighbour measures of e's endpoints, with
// hop distances from a radius-3 BFS.
TransportProblem NeighborTransportProblem(const Graph& g, const Edge& e);

// Exact earth mover's distance. Throws DomainError when a measure's masses
// do not sum to 1 within 1e-12, masses are negative, or supports repeat.
double Wasserstein1(const TransportProblem& p);

// Reusable scratch space for repeated curvature evaluations on one graph
// size. Not thread safe; use one per worker.
class OllivierEvaluator {
 public:
  // O(u, v) = 1 - W1(mu_u, mu_v) for the edge (u, v) of `adj`. Masses are
  // scaled to integers (deg(v) per source, deg(u) per sink) so the transport
  // cost is exact before the final division.
  double Curvature(const Adjacency& adj, NodeIndex u, NodeIndex v);

 private:
  std::vector<int> stamp_;
  std::vector<NodeIndex> rows_;
  std::vector<NodeIndex> cols_;
  int epoch_ = 0;
  std::vector<std::int64_t> supply_;
  std::vector<std::int64_t> demand_;
  std::vector<int> cost_;
};

// Throws ContractViolation if e is not an edge of g.
double OllivierRicci(const Graph& g, const Edge& e);

// threads <= 0 uses DefaultThreadCount().
CurvatureVector OllivierRicciAll(const Graph& g, int threads = 0);

}  // namespace ricci

#endif  // RICCI_OLLIVIER_H_
