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

#ifndef RICCI_GRAPH_H_
#define RICCI_GRAPH_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ricci {

// Identifier of a vertex as it appears in input files. Not required dense.
using VertexId = std::uint64_t;

// Dense position of a vertex inside a Graph (0..num_vertices-1). Because the
// vertex list is kept sorted, NodeIndex order coincides with VertexId order.
using NodeIndex = std::int32_t;

// Dense position of an edge inside a Graph's lexicographically sorted edge
// list.
using EdgeIndex = std::int32_t;

using Adjacency = std::vector<std::vector<NodeIndex>>;

// Undirected edge stored as (min, max). Ordering is lexicographic, which is
// the edge order induced by the vertex order.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// A pair of dense node indices with first < second.
struct NodePair {
  NodeIndex first = 0;
  NodeIndex second = 0;

  NodePair() = default;
  NodePair(NodeIndex a, NodeIndex b)
      : first(a < b ? a : b), second(a < b ? b : a) {}

  friend auto operator<=>(const NodePair&, const NodePair&) = default;
  friend bool operator==(const NodePair&, const NodePair&) = default;
};

// Simple undirected graph. Immutable after construction: every mutating
// operation returns a new value.
//
// Vertices are kept sorted by id, edges sorted lexicographically, adjacency
// lists sorted by node index.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from an edge list plus optional isolated vertices.
  // Duplicate edges collapse; a self-loop throws DomainError.
  static Graph FromEdges(std::span<const Edge> edges,
                         std::span<const VertexId> extra_vertices = {});

  // Convenience for tests and generators: vertices 0..n-1 plus edges.
  static Graph FromDense(std::size_t num_vertices,
                         std::span<const NodePair> edges);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  bool empty() const { return vertices_.empty(); }

  std::span<const VertexId> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const NodePair> edge_nodes() const { return edge_nodes_; }
  const Adjacency& adjacency() const { return adjacency_; }

  VertexId vertex_id(NodeIndex n) const { return vertices_[n]; }
  std::span<const NodeIndex> neighbors(NodeIndex n) const {
    return adjacency_[n];
  }
  std::size_t degree(NodeIndex n) const { return adjacency_[n].size(); }

  std::optional<NodeIndex> node_index(VertexId id) const;
  std::optional<EdgeIndex> edge_index(const Edge& e) const;
  std::optional<EdgeIndex> edge_index(NodePair p) const;

  // Like the lookups above but throw ContractViolation on a miss.
  NodeIndex require_node(VertexId id) const;
  EdgeIndex require_edge(const Edge& e) const;

  bool has_edge(const Edge& e) const { return edge_index(e).has_value(); }
  bool adjacent(NodeIndex a, NodeIndex b) const;

  // Returns a copy without `e`. Vertices are never dropped.
  // Throws ContractViolation when `e` is not present.
  Graph RemoveEdge(const Edge& e) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<NodePair> edge_nodes_;
  Adjacency adjacency_;
};

// Assignment of each vertex of a graph to a community label. Labels are
// contiguous integers starting at 0 once normalized.
class Partition {
 public:
  Partition() = default;

  // `vertices` and `labels` are parallel. Vertices must be distinct.
  Partition(std::vector<VertexId> vertices, std::vector<int> labels);

  static Partition FromMap(const std::map<VertexId, int>& labels);

  std::size_t size() const { return vertices_.size(); }
  std::span<const VertexId> vertices() const { return vertices_; }
  std::span<const int> labels() const { return labels_; }

  // Throws ContractViolation for an unknown vertex.
  int label(VertexId v) const;
  std::optional<int> find_label(VertexId v) const;

  int num_communities() const;

  // Relabels to 0..k-1 in order of each community's smallest vertex.
  Partition Normalized() const;

  // Vertex sets of every community, indexed by label.
  std::vector<std::vector<VertexId>> Communities() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<VertexId> vertices_;  // sorted
  std::vector<int> labels_;
};

// Connected components, labelled 0..k-1 by order of smallest member vertex.
Partition ConnectedComponents(const Graph& g);

// Unweighted shortest-path distances from each source to every vertex within
// `radius` hops. Pairs farther than `radius` (or unreachable) are omitted.
std::map<std::pair<VertexId, VertexId>, int> BfsDistances(
    const Graph& g, std::span<const VertexId> sources, int radius);

// Relabels every vertex through `mapping` (must be injective on vertices).
Graph RelabelVertices(const Graph& g, const std::map<VertexId, VertexId>& mapping);

}  // namespace ricci

#endif  // RICCI_GRAPH_H_
