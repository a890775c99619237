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

#include <benchmark/benchmark.h>

#include <vector>

#include "ricci/cycles.h"
#include "ricci/detection.h"
#include "ricci/forman.h"
#include "ricci/generators.h"
#include "ricci/ollivier.h"
#include "ricci/transport.h"

namespace ricci {
namespace {

const LabeledGraph& Sbm(int k) {
  static const LabeledGraph g15 = StochasticBlockModel(10, 15, 0.7, 0.05, 1);
  static const LabeledGraph g20 = StochasticBlockModel(10, 20, 0.7, 0.05, 1);
  return k == 15 ? g15 : g20;
}

void BM_CensusBuild(benchmark::State& state) {
  const Graph& g = Sbm(20).graph;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(CycleCensus::Build(g, n).num_cycles());
}
BENCHMARK(BM_CensusBuild)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_AugmentedFormanAll(benchmark::State& state) {
  const Graph& g = Sbm(20).graph;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(AugmentedFormanAll(g, n).values.data());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.num_edges()));
}
BENCHMARK(BM_AugmentedFormanAll)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_OllivierRicciAll(benchmark::State& state) {
  const Graph& g = Sbm(20).graph;
  for (auto _ : state) benchmark::DoNotOptimize(OllivierRicciAll(g, 1).values.data());
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.num_edges()));
}
BENCHMARK(BM_OllivierRicciAll)->Unit(benchmark::kMillisecond);

void BM_IntegerTransport(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  std::vector<std::int64_t> supply(size, size + 1), demand(size, size + 1);
  std::vector<int> cost(size * size);
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) cost[i * size + j] = 1 + (i * 7 + j * 3) % 3;
  }
  for (auto _ : state) benchmark::DoNotOptimize(SolveIntegerTransport(supply, demand, cost));
}
BENCHMARK(BM_IntegerTransport)->RangeMultiplier(2)->Range(4, 64);

void BM_Detection(benchmark::State& state) {
  const Graph& g = Sbm(static_cast<int>(state.range(1))).graph;
  DetectionConfig cfg;
  cfg.method = static_cast<CurvatureMethod>(state.range(0));
  cfg.direction = DefaultDirection(cfg.method);
  for (auto _ : state) benchmark::DoNotOptimize(DetectCommunities(g, cfg).iterations);
}
BENCHMARK(BM_Detection)
    ->ArgsProduct({{static_cast<int>(CurvatureMethod::kAfrc3),
                    static_cast<int>(CurvatureMethod::kAfrc4),
                    static_cast<int>(CurvatureMethod::kOrc)},
                   {15, 20}})
    ->Unit(benchmark::kSecond)
    ->Iterations(1);

}  // namespace
}  // namespace ricci

BENCHMARK_MAIN();
