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

#ifndef RICCI_DETECTION_H_
#define RICCI_DETECTION_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "ricci/analysis.h"
#include "ricci/curvature.h"
#include "ricci/graph.h"

namespace ricci {

enum class DeletionDirection {
  kDeleteMax,  // remove the largest value while any value exceeds the threshold
  kDeleteMin,  // remove the smallest value while any value is below it
};

// ORC and AFRC3 separate communities with low between-edge values; AFRC4/5
// reverse that, so they delete from the top. FRC follows ORC.
DeletionDirection DefaultDirection(CurvatureMethod m);
std::string_view DirectionName(DeletionDirection d);
std::optional<DeletionDirection> ParseDirection(std::string_view s);

struct DetectionConfig {
  CurvatureMethod method = CurvatureMethod::kAfrc3;
  DeletionDirection direction = DeletionDirection::kDeleteMin;
  std::optional<double> threshold;  // empty: fit two Gaussians
  std::uint64_t seed = 0;
  std::optional<std::size_t> max_deletions;  // empty: |E|
  int threads = 1;
};

struct DetectionResult {
  Partition partition;
  std::vector<Edge> deletions;
  double threshold_used = 0.0;
  std::optional<ThresholdFit> fit;
  std::size_t iterations = 0;
  std::chrono::duration<double> wall_time{0};
};

// Called once after the initial curvature pass and once after every
// deletion, with the residual graph and the incrementally maintained values.
using DetectionObserver =
    std::function<void(const Graph& residual, const CurvatureVector& current)>;

// Sequential edge deletion. Each round removes the extremal edge (ties broken
// uniformly with the tie-break stream of cfg.seed, over tied edges in
// canonical order) and re-evaluates only the edges the removal can affect:
//   FRC   edges touching either endpoint;
//   AFRC  those plus every edge sharing a retired cycle;
//   ORC   edges touching either endpoint, plus edges (a, b) with a ~ x and
//         b ~ y for some vertex pair (x, y) whose hop distance changed.
// Communities are the connected components of what remains.
DetectionResult DetectCommunities(const Graph& g, const DetectionConfig& cfg,
                                  const DetectionObserver& observer = {});

// Curvature of every edge of g by the given method.
CurvatureVector ComputeCurvature(const Graph& g, CurvatureMethod method,
                                 int threads = 1);

// Fraction of truth communities whose vertex set is exactly one detected
// community. Throws ContractViolation if the vertex sets differ.
double Accuracy(const Partition& detected, const Partition& truth);

void WriteDetectionJson(const DetectionResult& r, std::ostream& out,
                        std::optional<double> accuracy = std::nullopt);

}  // namespace ricci

#endif  // RICCI_DETECTION_H_
