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

#include "ricci/cycles.h"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "ricci/errors.h"

namespace ricci {

Cycle Cycle::FromSequence(std::span<const NodeIndex> nodes) {
  const int len = static_cast<int>(nodes.size());
  if (len < kMinCycleLength || len > kMaxCycleLength) {
    throw ContractViolation("cycle length " + std::to_string(len) +
                            " outside 3..5");
  }
  for (int i = 0; i < len; ++i) {
    for (int j = i + 1; j < len; ++j) {
      if (nodes[i] == nodes[j]) throw ContractViolation("cycle repeats a node");
    }
  }
  const int start = static_cast<int>(
      std::min_element(nodes.begin(), nodes.end()) - nodes.begin());
  const NodeIndex next = nodes[(start + 1) % len];
  const NodeIndex prev = nodes[(start + len - 1) % len];
  const int step = next < prev ? 1 : len - 1;

  Cycle c;
  c.length_ = len;
  for (int i = 0; i < len; ++i) c.nodes_[i] = nodes[(start + i * step) % len];
  return c;
}

int Cycle::Direction(NodePair e) const {
  for (int i = 0; i < length_; ++i) {
    const NodeIndex a = nodes_[i];
    const NodeIndex b = nodes_[(i + 1) % length_];
    if (a == e.first && b == e.second) return +1;
    if (a == e.second && b == e.first) return -1;
  }
  return 0;
}

bool Aligned(const Cycle& c, NodePair e, NodePair f) {
  if (e == f) throw ContractViolation("aligned: edges must be distinct");
  const int de = c.Direction(e);
  const int df = c.Direction(f);
  if (de == 0 || df == 0) throw ContractViolation("aligned: edge not on cycle");
  return de == df;
}

std::vector<Cycle> EnumerateCycles(const Graph& g, int max_len) {
  if (max_len < kMinCycleLength || max_len > kMaxCycleLength) {
    throw ContractViolation("max cycle length must be in 3..5");
  }
  std::vector<Cycle> out;
  const NodeIndex n = static_cast<NodeIndex>(g.num_vertices());
  std::vector<NodeIndex> path;
  std::vector<char> on_path(n, 0);

  // Paths start at their smallest node and only visit larger nodes; each
  // cycle is reached in both orientations, kept when path[1] < path.back().
  auto extend = [&](auto&& self) -> void {
    const NodeIndex tail = path.back();
    const int len = static_cast<int>(path.size());
    if (len >= kMinCycleLength && path[1] < tail && g.adjacent(tail, path[0])) {
      out.push_back(Cycle::FromSequence(path));
    }
    if (len == max_len) return;
    for (NodeIndex next : g.neighbors(tail)) {
      if (next <= path[0] || on_path[next]) continue;
      path.push_back(next);
      on_path[next] = 1;
      self(self);
      on_path[next] = 0;
      path.pop_back();
    }
  };

  for (NodeIndex s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path[s] = 1;
    extend(extend);
    on_path[s] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

CycleCensus CycleCensus::Build(const Graph& g, int max_len) {
  CycleCensus c;
  c.cycles_ = EnumerateCycles(g, max_len);
  c.max_length_ = max_len;
  c.num_nodes_ = g.num_vertices();
  c.edge_nodes_.assign(g.edge_nodes().begin(), g.edge_nodes().end());
  const std::size_t m = c.edge_nodes_.size();
  c.live_edges_ = m;
  c.removed_.assign(m, false);
  c.edge_cycles_.assign(m, {});
  c.cycle_count_.assign(m, 0);
  c.shared_neighbors_.assign(m, 0);
  c.imbalance_.assign(m, 0);
  c.pairs_.assign(m, {});
  c.cycle_alive_.assign(c.cycles_.size(), true);
  c.live_cycles_ = c.cycles_.size();
  for (std::size_t id = 0; id < c.cycles_.size(); ++id) {
    const Cycle& cyc = c.cycles_[id];
    for (int i = 0; i < cyc.length(); ++i) {
      c.edge_cycles_[c.LookupEdge(cyc.edge(i))].push_back(
          static_cast<std::int32_t>(id));
    }
    c.Apply(static_cast<std::int32_t>(id), +1);
  }
  return c;
}

EdgeIndex CycleCensus::LookupEdge(NodePair p) const {
  auto it = std::lower_bound(edge_nodes_.begin(), edge_nodes_.end(), p);
  if (it == edge_nodes_.end() || *it != p) {
    throw ContractViolation("census: cycle uses an unknown edge");
  }
  return static_cast<EdgeIndex>(it - edge_nodes_.begin());
}

bool CycleCensus::EdgesAdjacent(EdgeIndex e, EdgeIndex f) const {
  const NodePair a = edge_nodes_[e];
  const NodePair b = edge_nodes_[f];
  return a.first == b.first || a.first == b.second || a.second == b.first ||
         a.second == b.second;
}

void CycleCensus::Apply(std::int32_t cycle_id, int sign) {
  const Cycle& cyc = cycles_[cycle_id];
  const int len = cyc.length();
  std::array<EdgeIndex, kMaxCycleLength> idx{};
  std::array<int, kMaxCycleLength> dir{};
  for (int i = 0; i < len; ++i) {
    const NodePair p = cyc.edge(i);
    idx[i] = LookupEdge(p);
    dir[i] = cyc.nodes()[i] == p.first ? +1 : -1;
  }
  for (int i = 0; i < len; ++i) {
    const EdgeIndex e = idx[i];
    cycle_count_[e] += sign;
    auto& row = pairs_[e];
    for (int j = 0; j < len; ++j) {
      if (j == i) continue;
      const EdgeIndex f = idx[j];
      // Consecutive cycle edges share a node; others cannot (simple cycle).
      const bool neighbor = (j == (i + 1) % len) || (i == (j + 1) % len);
      AlignmentCounts& counts = row[f];
      const int before = counts.total();
      const int old_imbalance = std::abs(counts.aligned - counts.unaligned);
      (dir[i] == dir[j] ? counts.aligned : counts.unaligned) += sign;
      const int after = counts.total();
      if (neighbor) {
        if (before == 0 && after > 0) ++shared_neighbors_[e];
        if (before > 0 && after == 0) --shared_neighbors_[e];
      } else {
        imbalance_[e] += std::abs(counts.aligned - counts.unaligned) - old_imbalance;
      }
      if (after == 0) row.erase(f);
    }
  }
}

std::vector<EdgeIndex> CycleCensus::shared_neighbors(EdgeIndex e) const {
  std::vector<EdgeIndex> out;
  for (const auto& [f, counts] : pairs_[e]) {
    if (EdgesAdjacent(e, f)) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<EdgeIndex, AlignmentCounts> CycleCensus::nonadjacent_pairs(
    EdgeIndex e) const {
  std::map<EdgeIndex, AlignmentCounts> out;
  for (const auto& [f, counts] : pairs_[e]) {
    if (!EdgesAdjacent(e, f)) out.emplace(f, counts);
  }
  return out;
}

AlignmentCounts CycleCensus::pair_counts(EdgeIndex e, EdgeIndex f) const {
  auto it = pairs_[e].find(f);
  return it == pairs_[e].end() ? AlignmentCounts{} : it->second;
}

int CycleCensus::gamma(EdgeIndex e, EdgeIndex f) const {
  if (e == f) return cycle_count_[e];
  const AlignmentCounts counts = pair_counts(e, f);
  return e < f ? counts.aligned : counts.unaligned;
}

std::vector<Cycle> CycleCensus::LiveCycles() const {
  std::vector<Cycle> out;
  out.reserve(live_cycles_);
  for (std::size_t id = 0; id < cycles_.size(); ++id) {
    if (cycle_alive_[id]) out.push_back(cycles_[id]);
  }
  return out;
}

std::vector<EdgeIndex> CycleCensus::RemoveEdge(EdgeIndex e) {
  if (e < 0 || static_cast<std::size_t>(e) >= edge_nodes_.size() || removed_[e]) {
    throw ContractViolation("census: edge " + std::to_string(e) +
                            " is unknown or already removed");
  }
  std::vector<EdgeIndex> affected;
  for (std::int32_t id : edge_cycles_[e]) {
    if (!cycle_alive_[id]) continue;
    Apply(id, -1);
    cycle_alive_[id] = false;
    --live_cycles_;
    const Cycle& cyc = cycles_[id];
    for (int i = 0; i < cyc.length(); ++i) {
      const EdgeIndex f = LookupEdge(cyc.edge(i));
      if (f != e) affected.push_back(f);
    }
  }
  edge_cycles_[e].clear();
  removed_[e] = true;
  --live_edges_;
  std::sort(affected.begin(), affected.end());
  affected.erase(std::unique(affected.begin(), affected.end()), affected.end());
  return affected;
}

std::pair<CycleCensus, std::vector<EdgeIndex>> DeleteEdgeFromCensus(
    const CycleCensus& census, EdgeIndex e) {
  CycleCensus next = census;
  auto affected = next.RemoveEdge(e);
  return {std::move(next), std::move(affected)};
}

CensusSnapshot Snapshot(const CycleCensus& census) {
  CensusSnapshot snap;
  for (std::size_t i = 0; i < census.num_edge_slots(); ++i) {
    const auto e = static_cast<EdgeIndex>(i);
    if (census.removed(e)) continue;
    const NodePair key = census.edge_nodes(e);
    if (census.cycle_count(e) != 0) snap.cycle_count[key] = census.cycle_count(e);
    auto neighbors = census.shared_neighbors(e);
    if (!neighbors.empty()) {
      auto& out = snap.shared_neighbors[key];
      for (EdgeIndex f : neighbors) out.push_back(census.edge_nodes(f));
      std::sort(out.begin(), out.end());
    }
    auto pairs = census.nonadjacent_pairs(e);
    if (!pairs.empty()) {
      auto& out = snap.nonadjacent[key];
      for (const auto& [f, counts] : pairs) out[census.edge_nodes(f)] = counts;
    }
  }
  return snap;
}

}  // namespace ricci
