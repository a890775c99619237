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

#include "ricci/detection.h"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>

#include "json.hpp"
#include "ricci/cycles.h"
#include "ricci/errors.h"
#include "ricci/forman.h"
#include "ricci/ollivier.h"
#include "ricci/parallel.h"
#include "ricci/random.h"

namespace ricci {
namespace {

// ORC values within this distance of the extreme count as tied.
constexpr double kOrcTieTolerance = 1e-12;

// Mutable view of a graph under deletion. Node and edge indices stay those
// of the original graph; removed edges are flagged dead.
class ResidualGraph {
 public:
  explicit ResidualGraph(const Graph& g)
      : original_(g), adjacency_(g.adjacency()), alive_(g.num_edges(), true) {}

  const Adjacency& adjacency() const { return adjacency_; }
  bool alive(EdgeIndex e) const { return alive_[e]; }
  NodePair nodes(EdgeIndex e) const { return original_.edge_nodes()[e]; }

  int Frc(EdgeIndex e) const {
    const NodePair p = nodes(e);
    return 4 - static_cast<int>(adjacency_[p.first].size()) -
           static_cast<int>(adjacency_[p.second].size());
  }

  void Remove(EdgeIndex e) {
    const NodePair p = nodes(e);
    auto drop = [&](NodeIndex from, NodeIndex to) {
      auto& list = adjacency_[from];
      list.erase(std::lower_bound(list.begin(), list.end(), to));
    };
    drop(p.first, p.second);
    drop(p.second, p.first);
    alive_[e] = false;
  }

  // Live edges with an endpoint in `nodes`.
  void CollectIncident(std::span<const NodeIndex> nodes,
                       std::vector<EdgeIndex>& out) const {
    for (NodeIndex x : nodes) {
      for (NodeIndex y : adjacency_[x]) {
        out.push_back(*original_.edge_index(NodePair(x, y)));
      }
    }
  }

  bool Adjacent(NodeIndex a, NodeIndex b) const {
    const auto& list = adjacency_[a];
    return std::binary_search(list.begin(), list.end(), b);
  }

  bool ShareNeighbor(NodeIndex a, NodeIndex b) const {
    const auto& x = adjacency_[a];
    const auto& y = adjacency_[b];
    auto i = x.begin();
    auto j = y.begin();
    while (i != x.end() && j != y.end()) {
      if (*i == *j) return true;
      *i < *j ? ++i : ++j;
    }
    return false;
  }

  // Live edges whose Ollivier-Ricci curvature can differ after (p, q) was
  // removed. An edge (a, b) sees the deletion through its neighbour
  // measures (a or b in {p, q}) or through a ground distance d(x, y) with
  // x ~ a and y ~ b. Removing (p, q) changes d(p, q), and changes d(p, y)
  // for y ~ q only when q was their last common neighbour (likewise with p
  // and q swapped). Distances never exceed 3, so nothing else moves.
  void CollectOrcAffected(NodePair removed, std::vector<EdgeIndex>& out) const {
    const NodeIndex p = removed.first;
    const NodeIndex q = removed.second;
    const NodeIndex both[] = {p, q};
    CollectIncident(both, out);

    std::vector<NodePair> changed{{p, q}};
    for (auto [x, hub] : {std::pair{p, q}, std::pair{q, p}}) {
      for (NodeIndex y : adjacency_[hub]) {
        if (y != x && !Adjacent(x, y) && !ShareNeighbor(x, y)) {
          changed.emplace_back(x, y);
        }
      }
    }
    for (const NodePair& c : changed) {
      for (NodeIndex a : adjacency_[c.first]) {
        for (NodeIndex b : adjacency_[c.second]) {
          if (a != b && Adjacent(a, b)) {
            out.push_back(*original_.edge_index(NodePair(std::min(a, b), std::max(a, b))));
          }
        }
      }
    }
  }

  Graph Snapshot() const {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < alive_.size(); ++i) {
      if (alive_[i]) edges.push_back(original_.edges()[i]);
    }
    return Graph::FromEdges(edges, original_.vertices());
  }

 private:
  const Graph& original_;
  Adjacency adjacency_;
  std::vector<bool> alive_;
};

void SortUnique(std::vector<EdgeIndex>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

DeletionDirection DefaultDirection(CurvatureMethod m) {
  switch (m) {
    case CurvatureMethod::kAfrc4:
    case CurvatureMethod::kAfrc5:
      return DeletionDirection::kDeleteMax;
    default:
      return DeletionDirection::kDeleteMin;
  }
}

std::string_view DirectionName(DeletionDirection d) {
  return d == DeletionDirection::kDeleteMax ? "max" : "min";
}

std::optional<DeletionDirection> ParseDirection(std::string_view s) {
  if (s == "max" || s == "delete-max") return DeletionDirection::kDeleteMax;
  if (s == "min" || s == "delete-min") return DeletionDirection::kDeleteMin;
  return std::nullopt;
}

CurvatureVector ComputeCurvature(const Graph& g, CurvatureMethod method,
                                 int threads) {
  switch (method) {
    case CurvatureMethod::kFrc:
      return FormanAll(g);
    case CurvatureMethod::kOrc:
      return OllivierRicciAll(g, threads);
    default:
      return AugmentedFormanAll(g, CycleLengthOf(method));
  }
}

DetectionResult DetectCommunities(const Graph& g, const DetectionConfig& cfg,
                                  const DetectionObserver& observer) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t m = g.num_edges();
  const bool is_orc = cfg.method == CurvatureMethod::kOrc;
  const int cycle_length = CycleLengthOf(cfg.method);

  ResidualGraph residual(g);
  CycleCensus census;
  if (cycle_length > 0) census = CycleCensus::Build(g, cycle_length);

  CurvatureVector current;
  current.method = cfg.method;
  current.edges.assign(g.edges().begin(), g.edges().end());
  current.values.assign(m, 0.0);

  std::vector<OllivierEvaluator> evaluators(
      static_cast<std::size_t>(std::max(1, cfg.threads)));
  auto evaluate = [&](std::span<const EdgeIndex> edges) {
    if (is_orc) {
      ParallelChunks(edges.size(), cfg.threads,
                     [&](int worker, std::size_t begin, std::size_t end) {
                       for (std::size_t i = begin; i < end; ++i) {
                         const NodePair p = residual.nodes(edges[i]);
                         current.values[edges[i]] = evaluators[worker].Curvature(
                             residual.adjacency(), p.first, p.second);
                       }
                     });
      return;
    }
    for (EdgeIndex e : edges) {
      const int frc = residual.Frc(e);
      current.values[e] =
          cycle_length > 0 ? AugmentedFormanFromAggregates(frc, census, e) : frc;
    }
  };

  std::vector<EdgeIndex> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = static_cast<EdgeIndex>(i);
  evaluate(all);

  DetectionResult result;
  if (cfg.threshold) {
    result.threshold_used = *cfg.threshold;
  } else if (m > 0) {
    result.fit = FitTwoGaussians(current.values, cfg.seed);
    result.threshold_used = result.fit->delta;
  }
  const double threshold = result.threshold_used;
  const bool delete_max = cfg.direction == DeletionDirection::kDeleteMax;
  const std::size_t cap = std::min(m, cfg.max_deletions.value_or(m));
  const double tie_tolerance = is_orc ? kOrcTieTolerance : 0.0;

  auto emit = [&] {
    if (!observer) return;
    CurvatureVector live;
    live.method = cfg.method;
    for (std::size_t i = 0; i < m; ++i) {
      if (!residual.alive(static_cast<EdgeIndex>(i))) continue;
      live.edges.push_back(current.edges[i]);
      live.values.push_back(current.values[i]);
    }
    observer(residual.Snapshot(), live);
  };
  emit();

  StreamRng tie_rng(cfg.seed, kTieBreakStream);
  std::vector<EdgeIndex> tied;
  std::vector<EdgeIndex> affected;
  while (result.deletions.size() < cap) {
    // Extreme live value in the deletion direction.
    bool any = false;
    double extreme = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!residual.alive(static_cast<EdgeIndex>(i))) continue;
      const double x = current.values[i];
      if (!any || (delete_max ? x > extreme : x < extreme)) extreme = x;
      any = true;
    }
    if (!any) break;
    if (delete_max ? !(extreme > threshold) : !(extreme < threshold)) break;

    tied.clear();
    for (std::size_t i = 0; i < m; ++i) {
      if (residual.alive(static_cast<EdgeIndex>(i)) &&
          std::abs(current.values[i] - extreme) <= tie_tolerance) {
        tied.push_back(static_cast<EdgeIndex>(i));
      }
    }
    const EdgeIndex victim =
        tied.size() == 1 ? tied.front() : tied[tie_rng.Below(tied.size())];

    const NodePair ends = residual.nodes(victim);
    residual.Remove(victim);
    result.deletions.push_back(g.edges()[victim]);

    affected.clear();
    if (cycle_length > 0) affected = census.RemoveEdge(victim);
    if (is_orc) {
      residual.CollectOrcAffected(ends, affected);
    } else {
      const NodeIndex both[] = {ends.first, ends.second};
      residual.CollectIncident(both, affected);
    }
    SortUnique(affected);
    evaluate(affected);
    emit();
  }

  result.iterations = result.deletions.size();
  result.partition = ConnectedComponents(residual.Snapshot());
  result.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

double Accuracy(const Partition& detected, const Partition& truth) {
  if (!std::equal(detected.vertices().begin(), detected.vertices().end(),
                  truth.vertices().begin(), truth.vertices().end())) {
    throw ContractViolation("accuracy: partitions cover different vertices");
  }
  const auto found = detected.Communities();
  const std::set<std::vector<VertexId>> found_set(found.begin(), found.end());
  const auto expected = truth.Communities();
  if (expected.empty()) return 1.0;
  std::size_t hits = 0;
  for (const auto& community : expected) hits += found_set.count(community);
  return static_cast<double>(hits) / static_cast<double>(expected.size());
}

void WriteDetectionJson(const DetectionResult& r, std::ostream& out,
                        std::optional<double> accuracy) {
  nlohmann::ordered_json j;
  j["threshold"] = RoundForOutput(r.threshold_used);
  j["threshold_auto"] = r.fit.has_value();
  if (r.fit) {
    j["fit"] = {{"mu1", RoundForOutput(r.fit->mu1)},
                {"sigma1", RoundForOutput(r.fit->sigma1)},
                {"mu2", RoundForOutput(r.fit->mu2)},
                {"sigma2", RoundForOutput(r.fit->sigma2)},
                {"converged", r.fit->converged}};
  }
  j["iterations"] = r.iterations;
  j["wall_time_seconds"] = RoundForOutput(r.wall_time.count());
  j["num_communities"] = r.partition.num_communities();
  if (accuracy) j["accuracy"] = RoundForOutput(*accuracy);
  auto deletions = nlohmann::json::array();
  for (const Edge& e : r.deletions) deletions.push_back({e.u, e.v});
  j["deletions"] = std::move(deletions);
  auto partition = nlohmann::json::array();
  for (std::size_t i = 0; i < r.partition.size(); ++i) {
    partition.push_back({r.partition.vertices()[i], r.partition.labels()[i]});
  }
  j["partition"] = std::move(partition);
  out << j.dump(2) << '\n';
}

}  // namespace ricci
