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

#ifndef RICCI_FORMAN_H_
#define RICCI_FORMAN_H_

#include "ricci/curvature.h"
#include "ricci/cycles.h"
#include "ricci/graph.h"

namespace ricci {

// Forman-Ricci curvature of an unweighted simple graph edge:
//   F(u, v) = 4 - deg(u) - deg(v).
// Throws ContractViolation if `e` is not an edge of `g`.
int FormanCurvature(const Graph& g, const Edge& e);

CurvatureVector FormanAll(const Graph& g);

// Augmented Forman curvature from census aggregates:
//   AF(e) = F(e) - cycles(e) + 2 * shared_neighbors(e)
//           - sum over non-touching f of |aligned(e,f) - unaligned(e,f)|.
// `frc` is F(e) in the graph the census currently describes.
int AugmentedFormanFromAggregates(int frc, const CycleCensus& census,
                                  EdgeIndex e);

// Same quantity using the census built for `g` (cycles of length up to
// census.max_length()). Throws ContractViolation if the census does not
// describe `g`.
int AugmentedForman(const Graph& g, const CycleCensus& census, const Edge& e);

// Direct evaluation of the face-count form
//   AF(e) = 2 + G(e,e) - sum_{f~e} |G(e,f) + G(f,e) - 1|
//                      - sum_{f!~e} |G(e,f) - G(f,e)|
// walking every edge that touches e in `g`. Used to cross-check the
// aggregate form; slower but shares no bookkeeping with it.
int AugmentedFormanFaceForm(const Graph& g, const CycleCensus& census,
                            const Edge& e);

// AF_n for every edge, n in 3..5.
CurvatureVector AugmentedFormanAll(const Graph& g, int max_cycle_length);

}  // namespace ricci

#endif  // RICCI_FORMAN_H_
