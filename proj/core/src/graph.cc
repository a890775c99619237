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

#include "ricci/graph.h"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "ricci/errors.h"

namespace ricci {

Graph Graph::FromEdges(std::span<const Edge> edges,
                       std::span<const VertexId> extra_vertices) {
  Graph g;
  g.vertices_.reserve(2 * edges.size() + extra_vertices.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw DomainError("self-loop on vertex " + std::to_string(e.u));
    }
    g.vertices_.push_back(e.u);
    g.vertices_.push_back(e.v);
  }
  g.vertices_.insert(g.vertices_.end(), extra_vertices.begin(),
                     extra_vertices.end());
  std::sort(g.vertices_.begin(), g.vertices_.end());
  g.vertices_.erase(std::unique(g.vertices_.begin(), g.vertices_.end()),
                    g.vertices_.end());

  g.edges_.assign(edges.begin(), edges.end());
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.adjacency_.assign(g.vertices_.size(), {});
  g.edge_nodes_.reserve(g.edges_.size());
  for (const Edge& e : g.edges_) {
    const NodeIndex a = *g.node_index(e.u);
    const NodeIndex b = *g.node_index(e.v);
    g.edge_nodes_.emplace_back(a, b);
    g.adjacency_[a].push_back(b);
    g.adjacency_[b].push_back(a);
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  return g;
}

Graph Graph::FromDense(std::size_t num_vertices,
                       std::span<const NodePair> edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (const NodePair& p : edges) {
    list.emplace_back(static_cast<VertexId>(p.first),
                      static_cast<VertexId>(p.second));
  }
  std::vector<VertexId> ids(num_vertices);
  std::iota(ids.begin(), ids.end(), VertexId{0});
  return FromEdges(list, ids);
}

std::optional<NodeIndex> Graph::node_index(VertexId id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end() || *it != id) return std::nullopt;
  return static_cast<NodeIndex>(it - vertices_.begin());
}

std::optional<EdgeIndex> Graph::edge_index(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<EdgeIndex>(it - edges_.begin());
}

std::optional<EdgeIndex> Graph::edge_index(NodePair p) const {
  auto it = std::lower_bound(edge_nodes_.begin(), edge_nodes_.end(), p);
  if (it == edge_nodes_.end() || *it != p) return std::nullopt;
  return static_cast<EdgeIndex>(it - edge_nodes_.begin());
}

NodeIndex Graph::require_node(VertexId id) const {
  auto n = node_index(id);
  if (!n) throw ContractViolation("unknown vertex " + std::to_string(id));
  return *n;
}

EdgeIndex Graph::require_edge(const Edge& e) const {
  auto i = edge_index(e);
  if (!i) {
    throw ContractViolation("missing edge (" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + ")");
  }
  return *i;
}

bool Graph::adjacent(NodeIndex a, NodeIndex b) const {
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

Graph Graph::RemoveEdge(const Edge& e) const {
  const EdgeIndex idx = require_edge(e);
  Graph out = *this;
  out.edges_.erase(out.edges_.begin() + idx);
  out.edge_nodes_.erase(out.edge_nodes_.begin() + idx);
  const NodePair p = edge_nodes_[idx];
  auto drop = [&](NodeIndex from, NodeIndex to) {
    auto& list = out.adjacency_[from];
    list.erase(std::lower_bound(list.begin(), list.end(), to));
  };
  drop(p.first, p.second);
  drop(p.second, p.first);
  return out;
}

Partition::Partition(std::vector<VertexId> vertices, std::vector<int> labels) {
  if (vertices.size() != labels.size()) {
    throw ContractViolation("partition: vertex and label counts differ");
  }
  std::vector<std::size_t> order(vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return vertices[a] < vertices[b]; });
  vertices_.reserve(order.size());
  labels_.reserve(order.size());
  for (std::size_t i : order) {
    if (!vertices_.empty() && vertices_.back() == vertices[i]) {
      throw ContractViolation("partition: duplicate vertex " +
                              std::to_string(vertices[i]));
    }
    vertices_.push_back(vertices[i]);
    labels_.push_back(labels[i]);
  }
}

Partition Partition::FromMap(const std::map<VertexId, int>& labels) {
  std::vector<VertexId> v;
  std::vector<int> l;
  for (const auto& [vertex, label] : labels) {
    v.push_back(vertex);
    l.push_back(label);
  }
  return Partition(std::move(v), std::move(l));
}

std::optional<int> Partition::find_label(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return labels_[it - vertices_.begin()];
}

int Partition::label(VertexId v) const {
  auto l = find_label(v);
  if (!l) throw ContractViolation("partition: unknown vertex " + std::to_string(v));
  return *l;
}

int Partition::num_communities() const {
  std::vector<int> seen(labels_);
  std::sort(seen.begin(), seen.end());
  return static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

Partition Partition::Normalized() const {
  std::map<int, int> remap;
  std::vector<int> out(labels_.size());
  // Vertices are sorted, so first sighting of a label is its smallest member.
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    auto [it, inserted] =
        remap.try_emplace(labels_[i], static_cast<int>(remap.size()));
    out[i] = it->second;
  }
  Partition p;
  p.vertices_ = vertices_;
  p.labels_ = std::move(out);
  return p;
}

std::vector<std::vector<VertexId>> Partition::Communities() const {
  const Partition norm = Normalized();
  std::vector<std::vector<VertexId>> out(norm.num_communities());
  for (std::size_t i = 0; i < norm.vertices_.size(); ++i) {
    out[norm.labels_[i]].push_back(norm.vertices_[i]);
  }
  return out;
}

Partition ConnectedComponents(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<int> label(n, -1);
  int next = 0;
  std::vector<NodeIndex> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    stack.push_back(static_cast<NodeIndex>(s));
    while (!stack.empty()) {
      const NodeIndex x = stack.back();
      stack.pop_back();
      for (NodeIndex y : g.neighbors(x)) {
        if (label[y] < 0) {
          label[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return Partition({g.vertices().begin(), g.vertices().end()}, std::move(label));
}

std::map<std::pair<VertexId, VertexId>, int> BfsDistances(
    const Graph& g, std::span<const VertexId> sources, int radius) {
  std::map<std::pair<VertexId, VertexId>, int> out;
  std::vector<int> dist(g.num_vertices(), -1);
  std::vector<NodeIndex> touched;
  std::deque<NodeIndex> queue;
  for (VertexId source : sources) {
    const NodeIndex s = g.require_node(source);
    dist[s] = 0;
    touched.push_back(s);
    queue.push_back(s);
    while (!queue.empty()) {
      const NodeIndex x = queue.front();
      queue.pop_front();
      out[{source, g.vertex_id(x)}] = dist[x];
      if (dist[x] == radius) continue;
      for (NodeIndex y : g.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          touched.push_back(y);
          queue.push_back(y);
        }
      }
    }
    for (NodeIndex t : touched) dist[t] = -1;
    touched.clear();
  }
  return out;
}

Graph RelabelVertices(const Graph& g,
                      const std::map<VertexId, VertexId>& mapping) {
  auto map_one = [&](VertexId v) {
    auto it = mapping.find(v);
    if (it == mapping.end()) {
      throw ContractViolation("relabel: no image for vertex " + std::to_string(v));
    }
    return it->second;
  };
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.emplace_back(map_one(e.u), map_one(e.v));
  std::vector<VertexId> ids;
  ids.reserve(g.num_vertices());
  for (VertexId v : g.vertices()) ids.push_back(map_one(v));
  Graph out = Graph::FromEdges(edges, ids);
  if (out.num_vertices() != g.num_vertices()) {
    throw ContractViolation("relabel: mapping is not injective");
  }
  return out;
}

}  // namespace ricci
