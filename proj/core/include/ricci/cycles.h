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

#ifndef RICCI_CYCLES_H_
#define RICCI_CYCLES_H_

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ricci/graph.h"

namespace ricci {

inline constexpr int kMinCycleLength = 3;
inline constexpr int kMaxCycleLength = 5;

// A simple cycle v1 v2 ... vl over dense node indices, stored canonically:
// rotated so the smallest node comes first, then oriented so that the second
// node is the smaller of the first node's two cycle neighbours. The stored
// order doubles as the cycle's traversal direction.
class Cycle {
 public:
  Cycle() = default;

  // Canonicalizes an arbitrary rotation/reflection of a cycle. Throws
  // ContractViolation for lengths outside 3..5 or repeated nodes. Does not
  // check that consecutive nodes are adjacent in any graph.
  static Cycle FromSequence(std::span<const NodeIndex> nodes);

  int length() const { return length_; }
  std::span<const NodeIndex> nodes() const { return {nodes_.data(), static_cast<std::size_t>(length_)}; }

  // i-th edge of the traversal: (nodes[i], nodes[i+1 mod length]).
  NodePair edge(int i) const {
    return {nodes_[i], nodes_[(i + 1) % length_]};
  }

  // +1 if the traversal crosses `e` from its smaller to its larger node,
  // -1 for the opposite sense, 0 if `e` is not an edge of the cycle.
  int Direction(NodePair e) const;
  bool Contains(NodePair e) const { return Direction(e) != 0; }

  friend auto operator<=>(const Cycle&, const Cycle&) = default;
  friend bool operator==(const Cycle&, const Cycle&) = default;

 private:
  std::array<NodeIndex, kMaxCycleLength> nodes_{};
  int length_ = 0;
};

// True iff the cycle traverses both edges small-to-large or both
// large-to-small. Reversing the cycle flips both senses, so the answer does
// not depend on the orientation chosen for storage.
// Throws ContractViolation if e == f or either edge is not on the cycle.
bool Aligned(const Cycle& c, NodePair e, NodePair f);

// All simple cycles of length 3..max_len, each once, in canonical form and
// sorted. Chorded cycles are included. max_len must be in 3..5.
std::vector<Cycle> EnumerateCycles(const Graph& g, int max_len);

struct AlignmentCounts {
  int aligned = 0;
  int unaligned = 0;

  int total() const { return aligned + unaligned; }
  friend bool operator==(const AlignmentCounts&, const AlignmentCounts&) = default;
};

// Per-edge reductions of the cycle count matrix, indexed by the EdgeIndex of
// the graph the census was built on. Supports in-place edge deletion: every
// cycle through the deleted edge is retired and its contributions removed.
//
// For an ordered pair of distinct edges (e, f) the count-matrix entry is
//   aligned(e, f)   if e < f,
//   unaligned(e, f) if e > f,
// and the diagonal entry is the number of cycles through e.
class CycleCensus {
 public:
  CycleCensus() = default;

  static CycleCensus Build(const Graph& g, int max_len);

  int max_length() const { return max_length_; }
  std::size_t num_nodes() const { return num_nodes_; }
  std::size_t num_edge_slots() const { return edge_nodes_.size(); }
  std::size_t num_live_edges() const { return live_edges_; }
  std::size_t num_cycles() const { return live_cycles_; }

  NodePair edge_nodes(EdgeIndex e) const { return edge_nodes_[e]; }
  bool removed(EdgeIndex e) const { return removed_[e]; }
  bool EdgesAdjacent(EdgeIndex e, EdgeIndex f) const;

  // Number of live cycles through e (diagonal entry).
  int cycle_count(EdgeIndex e) const { return cycle_count_[e]; }

  // Number of edges sharing a vertex with e that lie on a common cycle.
  int shared_neighbor_count(EdgeIndex e) const { return shared_neighbors_[e]; }

  // Sum over edges f not touching e of |aligned(e,f) - unaligned(e,f)|.
  int nonadjacent_imbalance(EdgeIndex e) const { return imbalance_[e]; }

  std::vector<EdgeIndex> shared_neighbors(EdgeIndex e) const;
  std::map<EdgeIndex, AlignmentCounts> nonadjacent_pairs(EdgeIndex e) const;

  // Alignment counts over the live cycles containing both edges.
  AlignmentCounts pair_counts(EdgeIndex e, EdgeIndex f) const;

  // Count-matrix entry for the ordered pair (row e, column f).
  int gamma(EdgeIndex e, EdgeIndex f) const;

  std::vector<Cycle> LiveCycles() const;

  // Retires e and every cycle through it. Returns the other edges of the
  // retired cycles (sorted, unique). Throws ContractViolation for an unknown
  // or already removed edge.
  std::vector<EdgeIndex> RemoveEdge(EdgeIndex e);

 private:
  EdgeIndex LookupEdge(NodePair p) const;
  void Apply(std::int32_t cycle_id, int sign);

  int max_length_ = 0;
  std::size_t num_nodes_ = 0;
  std::size_t live_edges_ = 0;
  std::size_t live_cycles_ = 0;

  std::vector<NodePair> edge_nodes_;
  std::vector<bool> removed_;

  std::vector<Cycle> cycles_;
  std::vector<bool> cycle_alive_;
  std::vector<std::vector<std::int32_t>> edge_cycles_;

  std::vector<int> cycle_count_;
  std::vector<int> shared_neighbors_;
  std::vector<int> imbalance_;
  std::vector<std::unordered_map<EdgeIndex, AlignmentCounts>> pairs_;
};

// Value-returning form of CycleCensus::RemoveEdge.
std::pair<CycleCensus, std::vector<EdgeIndex>> DeleteEdgeFromCensus(
    const CycleCensus& census, EdgeIndex e);

// Census contents keyed by node pairs so that censuses built on different
// edge indexings (e.g. before and after a deletion) compare directly. Zero
// entries and removed edges are left out.
struct CensusSnapshot {
  std::map<NodePair, int> cycle_count;
  std::map<NodePair, std::vector<NodePair>> shared_neighbors;
  std::map<NodePair, std::map<NodePair, AlignmentCounts>> nonadjacent;

  friend bool operator==(const CensusSnapshot&, const CensusSnapshot&) = default;
};

CensusSnapshot Snapshot(const CycleCensus& census);

}  // namespace ricci

#endif  // RICCI_CYCLES_H_
