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

#include "ricci/generators.h"

#include <algorithm>
#include <queue>
#include <string>
#include <vector>

#include "ricci/errors.h"
#include "ricci/random.h"

namespace ricci {
namespace {

void CheckProbability(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError(std::string(name) + " must lie in [0,1], got " +
                      std::to_string(x));
  }
}

void CheckSize(int x, const char* name) {
  if (x < 1) throw DomainError(std::string(name) + " must be >= 1");
}

void CheckOrdered(double p, double q) {
  if (q > p) throw DomainError("model requires q <= p");
}

// Visits every pair (i, j), i < j < n, in lexicographic order and keeps it
// when its draw falls below prob(i, j). prob < 0 marks pairs to skip.
template <typename Prob>
std::vector<NodePair> SamplePairs(int n, std::uint64_t seed, Prob&& prob) {
  std::vector<NodePair> edges;
  const std::uint64_t key = StreamKey(seed, kPairStream);
  std::uint64_t t = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++t) {
      const double pr = prob(i, j);
      if (pr <= 0.0) continue;
      const double u = UnitInterval(Mix64(key + (t + 1) * kGoldenGamma));
      if (u < pr) edges.emplace_back(i, j);
    }
  }
  return edges;
}

Partition BlockLabels(int blocks, int size) {
  std::vector<VertexId> v;
  std::vector<int> l;
  for (int b = 0; b < blocks; ++b) {
    for (int i = 0; i < size; ++i) {
      v.push_back(static_cast<VertexId>(b * size + i));
      l.push_back(b);
    }
  }
  return Partition(std::move(v), std::move(l));
}

// Decodes a uniformly drawn Pruefer sequence into tree edges over 0..k-1.
std::vector<NodePair> RandomTree(int k, StreamRng& rng) {
  std::vector<NodePair> edges;
  if (k < 2) return edges;
  if (k == 2) {
    edges.emplace_back(0, 1);
    return edges;
  }
  std::vector<int> code(k - 2);
  for (int& c : code) c = static_cast<int>(rng.Below(static_cast<std::uint64_t>(k)));
  std::vector<int> degree(k, 1);
  for (int c : code) ++degree[c];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < k; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  for (int c : code) {
    const int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  const int a = leaves.top();
  leaves.pop();
  const int b = leaves.top();
  edges.emplace_back(a, b);
  return edges;
}

}  // namespace

Graph ErdosRenyi(int n, double p, std::uint64_t seed) {
  CheckSize(n, "n");
  CheckProbability(p, "p");
  auto edges = SamplePairs(n, seed, [p](int, int) { return p; });
  return Graph::FromDense(static_cast<std::size_t>(n), edges);
}

Graph BipartiteErdosRenyi(int n, double p, std::uint64_t seed) {
  CheckSize(n, "n");
  CheckProbability(p, "p");
  auto edges = SamplePairs(2 * n, seed, [n, p](int i, int j) {
    return (i < n) != (j < n) ? p : -1.0;
  });
  return Graph::FromDense(static_cast<std::size_t>(2 * n), edges);
}

LabeledGraph StochasticBlockModel(int l, int k, double p, double q,
                                  std::uint64_t seed) {
  CheckSize(l, "l");
  CheckSize(k, "k");
  CheckProbability(p, "p");
  CheckProbability(q, "q");
  CheckOrdered(p, q);
  auto edges = SamplePairs(l * k, seed, [k, p, q](int i, int j) {
    return i / k == j / k ? p : q;
  });
  return {Graph::FromDense(static_cast<std::size_t>(l * k), edges),
          BlockLabels(l, k)};
}

LabeledGraph TreeStochasticBlockModel(int l, int k, double p, double q,
                                      std::uint64_t seed) {
  CheckSize(l, "l");
  CheckSize(k, "k");
  CheckProbability(p, "p");
  CheckProbability(q, "q");
  const int n = l * k;
  std::vector<char> is_tree_pair(static_cast<std::size_t>(n) * n, 0);
  std::vector<NodePair> edges;
  for (int c = 0; c < l; ++c) {
    StreamRng rng(seed, kTreeStreamBase + static_cast<std::uint64_t>(c));
    for (NodePair e : RandomTree(k, rng)) {
      const NodePair shifted(e.first + c * k, e.second + c * k);
      edges.push_back(shifted);
      is_tree_pair[static_cast<std::size_t>(shifted.first) * n + shifted.second] = 1;
    }
  }
  auto extra = SamplePairs(n, seed, [&](int i, int j) {
    if (i / k != j / k) return q;
    return is_tree_pair[static_cast<std::size_t>(i) * n + j] ? -1.0 : p;
  });
  edges.insert(edges.end(), extra.begin(), extra.end());
  return {Graph::FromDense(static_cast<std::size_t>(n), edges), BlockLabels(l, k)};
}

LabeledGraph HierarchicalBipartite(int n, double p, double q,
                                   std::uint64_t seed) {
  CheckSize(n, "n");
  CheckProbability(p, "p");
  CheckProbability(q, "q");
  CheckOrdered(p, q);
  auto side = [n](int v) { return (v % (2 * n)) >= n; };
  auto community = [n](int v) { return v / (2 * n); };
  auto edges = SamplePairs(4 * n, seed, [&](int i, int j) {
    if (side(i) == side(j)) return -1.0;
    return community(i) == community(j) ? p : q;
  });
  return {Graph::FromDense(static_cast<std::size_t>(4 * n), edges),
          BlockLabels(2, 2 * n)};
}

std::string_view ModelName(GraphModel m) {
  switch (m) {
    case GraphModel::kEr: return "er";
    case GraphModel::kBipartiteEr: return "bg";
    case GraphModel::kSbm: return "sbm";
    case GraphModel::kTreeSbm: return "tsbm";
    case GraphModel::kHbg: return "hbg";
  }
  return "?";
}

std::optional<GraphModel> ParseModel(std::string_view name) {
  if (name == "er") return GraphModel::kEr;
  if (name == "bg" || name == "bipartite") return GraphModel::kBipartiteEr;
  if (name == "sbm") return GraphModel::kSbm;
  if (name == "tsbm" || name == "tree-sbm") return GraphModel::kTreeSbm;
  if (name == "hbg") return GraphModel::kHbg;
  return std::nullopt;
}

GeneratedGraph Generate(const ModelParams& params) {
  switch (params.model) {
    case GraphModel::kEr:
      return {ErdosRenyi(params.n, params.p, params.seed), std::nullopt};
    case GraphModel::kBipartiteEr:
      return {BipartiteErdosRenyi(params.n, params.p, params.seed), std::nullopt};
    case GraphModel::kSbm: {
      auto g = StochasticBlockModel(params.l, params.k, params.p, params.q, params.seed);
      return {std::move(g.graph), std::move(g.truth)};
    }
    case GraphModel::kTreeSbm: {
      auto g = TreeStochasticBlockModel(params.l, params.k, params.p, params.q,
                                        params.seed);
      return {std::move(g.graph), std::move(g.truth)};
    }
    case GraphModel::kHbg: {
      auto g = HierarchicalBipartite(params.n, params.p, params.q, params.seed);
      return {std::move(g.graph), std::move(g.truth)};
    }
  }
  throw ContractViolation("unknown graph model");
}

}  // namespace ricci
