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

#include "ricci/ollivier.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

#include "ricci/errors.h"
#include "ricci/parallel.h"

namespace ricci {
namespace {

constexpr double kMassTolerance = 1e-12;

void ValidateMeasure(const DiscreteMeasure& m, const char* which) {
  if (m.support.size() != m.mass.size()) {
    throw DomainError(std::string(which) + ": support and mass sizes differ");
  }
  std::vector<VertexId> sorted = m.support;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError(std::string(which) + ": repeated support vertex");
  }
  double total = 0.0;
  for (double x : m.mass) {
    if (!(x >= 0.0)) throw DomainError(std::string(which) + ": negative mass");
    total += x;
  }
  if (std::abs(total - 1.0) > kMassTolerance) {
    throw DomainError(std::string(which) + ": masses sum to " + std::to_string(total));
  }
}

}  // namespace

DiscreteMeasure NeighborMeasure(const Graph& g, VertexId v) {
  const NodeIndex n = g.require_node(v);
  const auto neighbors = g.neighbors(n);
  if (neighbors.empty()) {
    throw DomainError("vertex " + std::to_string(v) + " is isolated");
  }
  DiscreteMeasure m;
  const double w = 1.0 / static_cast<double>(neighbors.size());
  for (NodeIndex x : neighbors) {
    m.support.push_back(g.vertex_id(x));
    m.mass.push_back(w);
  }
  return m;
}

TransportProblem NeighborTransportProblem(const Graph& g, const Edge& e) {
  g.require_edge(e);
  TransportProblem p;
  p.supply = NeighborMeasure(g, e.u);
  p.demand = NeighborMeasure(g, e.v);
  const auto dist = BfsDistances(g, p.supply.support, 3);
  p.cost = CostMatrix(p.supply.support.size(), p.demand.support.size());
  for (std::size_t i = 0; i < p.supply.support.size(); ++i) {
    for (std::size_t j = 0; j < p.demand.support.size(); ++j) {
      // x - u - v - y is always a path, so every pair is within radius 3.
      p.cost(i, j) = dist.at({p.supply.support[i], p.demand.support[j]});
    }
  }
  return p;
}

double Wasserstein1(const TransportProblem& p) {
  ValidateMeasure(p.supply, "supply");
  ValidateMeasure(p.demand, "demand");
  if (p.cost.rows() != p.supply.support.size() ||
      p.cost.cols() != p.demand.support.size()) {
    throw DomainError("cost matrix shape does not match supports");
  }
  return SolveTransport(p.supply.mass, p.demand.mass, p.cost, kMassTolerance);
}

double OllivierEvaluator::Curvature(const Adjacency& adj, NodeIndex u,
                                    NodeIndex v) {
  const auto& from = adj[u];
  const auto& to = adj[v];
  if (stamp_.size() < adj.size()) stamp_.assign(adj.size(), 0);

  const auto du = static_cast<long>(from.size());
  const auto dv = static_cast<long>(to.size());

  // A vertex in both supports keeps min(dv, du) of its mass in place at no
  // cost; with a metric ground cost some optimal plan does this. Only the
  // leftovers enter the transport problem.
  rows_.clear();
  cols_.clear();
  supply_.clear();
  demand_.clear();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < from.size() || j < to.size()) {
    if (j == to.size() || (i < from.size() && from[i] < to[j])) {
      rows_.push_back(from[i++]);
      supply_.push_back(dv);
    } else if (i == from.size() || to[j] < from[i]) {
      cols_.push_back(to[j++]);
      demand_.push_back(du);
    } else {
      if (dv > du) {
        rows_.push_back(from[i]);
        supply_.push_back(dv - du);
      } else if (du > dv) {
        cols_.push_back(to[j]);
        demand_.push_back(du - dv);
      }
      ++i;
      ++j;
    }
  }

  std::int64_t scaled = 0;
  if (!rows_.empty()) {
    cost_.resize(rows_.size() * cols_.size());
    // Ground distances never exceed 3 (x - u - v - y), and no vertex is both
    // a row and a column here, so only adjacent and two-hop pairs need care.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (++epoch_ == 0) {
        std::fill(stamp_.begin(), stamp_.end(), 0);
        epoch_ = 1;
      }
      for (NodeIndex z : adj[rows_[r]]) stamp_[z] = epoch_;
      for (std::size_t c = 0; c < cols_.size(); ++c) {
        const NodeIndex y = cols_[c];
        int d = 3;
        if (stamp_[y] == epoch_) {
          d = 1;
        } else {
          for (NodeIndex z : adj[y]) {
            if (stamp_[z] == epoch_) {
              d = 2;
              break;
            }
          }
        }
        cost_[r * cols_.size() + c] = d;
      }
    }
    scaled = SolveIntegerTransport(supply_, demand_, cost_);
  }
  return 1.0 - static_cast<double>(scaled) /
                   (static_cast<double>(du) * static_cast<double>(dv));
}

double OllivierRicci(const Graph& g, const Edge& e) {
  const NodePair p = g.edge_nodes()[g.require_edge(e)];
  OllivierEvaluator eval;
  return eval.Curvature(g.adjacency(), p.first, p.second);
}

CurvatureVector OllivierRicciAll(const Graph& g, int threads) {
  CurvatureVector cv;
  cv.method = CurvatureMethod::kOrc;
  cv.edges.assign(g.edges().begin(), g.edges().end());
  cv.values.assign(g.num_edges(), 0.0);
  ParallelChunks(g.num_edges(), threads,
                 [&](int, std::size_t begin, std::size_t end) {
                   OllivierEvaluator eval;
                   for (std::size_t i = begin; i < end; ++i) {
                     const NodePair p = g.edge_nodes()[i];
                     cv.values[i] = eval.Curvature(g.adjacency(), p.first, p.second);
                   }
                 });
  return cv;
}

}  // namespace ricci
