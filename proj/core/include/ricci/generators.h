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

#ifndef RICCI_GENERATORS_H_
#define RICCI_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "ricci/graph.h"

namespace ricci {

// Random graph models. All draws come from the counter-based streams in
// random.h: vertex pairs (i < j) are visited in lexicographic order and pair
// number t uses CounterUniform(seed, kPairStream, t), so a given seed yields
// the same graph on every platform. Vertices are 0..N-1.

struct LabeledGraph {
  Graph graph;
  Partition truth;
};

// G(n, p).
Graph ErdosRenyi(int n, double p, std::uint64_t seed);

// Two sides {0..n-1} and {n..2n-1}; only cross pairs are sampled.
Graph BipartiteErdosRenyi(int n, double p, std::uint64_t seed);

// l communities of k consecutive vertices; within pairs with probability p,
// between pairs with q. Requires q <= p.
LabeledGraph StochasticBlockModel(int l, int k, double p, double q,
                                  std::uint64_t seed);

// Each community starts as a uniform random labelled tree (Pruefer code from
// stream kTreeStreamBase + community); remaining within pairs are added with
// probability p and between pairs with q.
LabeledGraph TreeStochasticBlockModel(int l, int k, double p, double q,
                                      std::uint64_t seed);

// 4n vertices: community c in {0,1} holds side-0 vertices c*2n + [0,n) and
// side-1 vertices c*2n + n + [0,n). Only pairs on opposite sides are
// sampled, with p inside a community and q across. Requires q <= p.
LabeledGraph HierarchicalBipartite(int n, double p, double q,
                                   std::uint64_t seed);

enum class GraphModel { kEr, kBipartiteEr, kSbm, kTreeSbm, kHbg };

std::string_view ModelName(GraphModel m);
std::optional<GraphModel> ParseModel(std::string_view name);

struct ModelParams {
  GraphModel model = GraphModel::kEr;
  int n = 0;  // ER, BG, HBG
  int l = 0;  // SBM, TSBM
  int k = 0;  // SBM, TSBM
  double p = 0.0;
  double q = 0.0;
  std::uint64_t seed = 0;
};

struct GeneratedGraph {
  Graph graph;
  std::optional<Partition> truth;  // empty for ER and BG
};

GeneratedGraph Generate(const ModelParams& params);

// Lexicographic rank of the pair (i, j), i < j < n.
constexpr std::uint64_t PairIndex(std::uint64_t i, std::uint64_t j,
                                  std::uint64_t n) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

}  // namespace ricci

#endif  // RICCI_GENERATORS_H_
