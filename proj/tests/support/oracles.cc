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

#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

namespace ricci::testing {

Graph RandomGraph(Rng& rng, int min_vertices, int max_vertices, int max_edges) {
  const int n = std::uniform_int_distribution<int>(min_vertices, max_vertices)(rng);
  std::vector<Edge> all;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
  }
  std::shuffle(all.begin(), all.end(), rng);
  const int cap = std::min<int>(max_edges, static_cast<int>(all.size()));
  const int m = cap == 0 ? 0 : std::uniform_int_distribution<int>(cap / 2, cap)(rng);
  all.resize(m);
  std::vector<VertexId> vertices(n);
  std::iota(vertices.begin(), vertices.end(), 0);
  return Graph::FromEdges(all, vertices);
}

Graph RandomTree(Rng& rng, int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  }
  std::vector<VertexId> vertices(n);
  std::iota(vertices.begin(), vertices.end(), 0);
  return Graph::FromEdges(edges, vertices);
}

Graph RandomBipartite(Rng& rng, int a, int b, double p) {
  std::bernoulli_distribution keep(p);
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      if (keep(rng)) edges.emplace_back(i, a + j);
    }
  }
  std::vector<VertexId> vertices(a + b);
  std::iota(vertices.begin(), vertices.end(), 0);
  return Graph::FromEdges(edges, vertices);
}

std::vector<std::vector<NodeIndex>> BruteForceCycles(const Graph& g, int max_len) {
  const int n = static_cast<int>(g.num_vertices());
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const NodePair& p : g.edge_nodes()) adj[p.first][p.second] = adj[p.second][p.first] = 1;

  std::set<std::vector<NodePair>> seen;
  std::vector<std::vector<NodeIndex>> out;
  std::vector<NodeIndex> seq;
  auto visit = [&](auto&& self, int len) -> void {
    if (static_cast<int>(seq.size()) == len) {
      if (!adj[seq.back()][seq.front()]) return;
      std::vector<NodePair> edges;
      for (int i = 0; i < len; ++i) edges.emplace_back(seq[i], seq[(i + 1) % len]);
      std::sort(edges.begin(), edges.end());
      if (seen.insert(edges).second) out.push_back(seq);
      return;
    }
    for (NodeIndex v = 0; v < n; ++v) {
      if (std::find(seq.begin(), seq.end(), v) != seq.end()) continue;
      if (!seq.empty() && !adj[seq.back()][v]) continue;
      seq.push_back(v);
      self(self, len);
      seq.pop_back();
    }
  };
  for (int len = 3; len <= max_len; ++len) visit(visit, len);
  return out;
}

GammaMatrix::GammaMatrix(const Graph& g,
                         const std::vector<std::vector<NodeIndex>>& cycles)
    : m_(g.num_edges()), data_(m_ * m_, 0) {
  for (const auto& c : cycles) {
    const std::size_t len = c.size();
    std::vector<EdgeIndex> idx(len);
    std::vector<int> sense(len);
    for (std::size_t i = 0; i < len; ++i) {
      const NodeIndex a = c[i];
      const NodeIndex b = c[(i + 1) % len];
      idx[i] = *g.edge_index(NodePair(a, b));
      sense[i] = a < b ? 1 : -1;
    }
    for (std::size_t i = 0; i < len; ++i) {
      ++data_[idx[i] * m_ + idx[i]];
      for (std::size_t j = i + 1; j < len; ++j) {
        const EdgeIndex lo = std::min(idx[i], idx[j]);
        const EdgeIndex hi = std::max(idx[i], idx[j]);
        if (sense[i] == sense[j]) {
          ++data_[lo * m_ + hi];
        } else {
          ++data_[hi * m_ + lo];
        }
      }
    }
  }
}

std::vector<int> FaceFormFromGamma(const Graph& g, const GammaMatrix& gamma) {
  const auto nodes = g.edge_nodes();
  std::vector<int> out(g.num_edges());
  for (std::size_t e = 0; e < nodes.size(); ++e) {
    int af = 2 + gamma(e, e);
    for (std::size_t f = 0; f < nodes.size(); ++f) {
      if (f == e) continue;
      const bool touch = nodes[e].first == nodes[f].first ||
                         nodes[e].first == nodes[f].second ||
                         nodes[e].second == nodes[f].first ||
                         nodes[e].second == nodes[f].second;
      if (touch) {
        af -= std::abs(gamma(e, f) + gamma(f, e) - 1);
      } else {
        af -= std::abs(gamma(e, f) - gamma(f, e));
      }
    }
    out[e] = af;
  }
  return out;
}

std::vector<int> TrianglesPerEdge(const Graph& g) {
  std::vector<int> out;
  const auto n = static_cast<NodeIndex>(g.num_vertices());
  for (const NodePair& p : g.edge_nodes()) {
    int t = 0;
    for (NodeIndex w = 0; w < n; ++w) {
      if (w != p.first && w != p.second && g.adjacent(w, p.first) &&
          g.adjacent(w, p.second)) {
        ++t;
      }
    }
    out.push_back(t);
  }
  return out;
}

std::vector<std::vector<int>> FloydWarshall(const Graph& g) {
  const std::size_t n = g.num_vertices();
  constexpr int kFar = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kFar));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const NodePair& p : g.edge_nodes()) d[p.first][p.second] = d[p.second][p.first] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  for (auto& row : d) {
    for (int& x : row) {
      if (x >= kFar) x = -1;
    }
  }
  return d;
}

namespace {

// Solves the square system a x = b in place; false if singular.
bool Solve(std::vector<std::vector<double>> a, std::vector<double> b,
           std::vector<double>& x) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) < 1e-12) return false;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  x.resize(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return true;
}

}  // namespace

double BruteForceTransport(std::span<const double> supply,
                           std::span<const double> demand, const CostMatrix& cost) {
  const std::size_t m = supply.size();
  const std::size_t n = demand.size();
  const std::size_t cells = m * n;
  const std::size_t rank = m + n - 1;

  // Equations: every row sum, and all column sums but the last (implied).
  std::vector<double> rhs(supply.begin(), supply.end());
  rhs.insert(rhs.end(), demand.begin(), demand.end() - 1);

  double best = std::numeric_limits<double>::infinity();
  std::vector<char> pick(cells, 0);
  std::fill(pick.end() - static_cast<long>(rank), pick.end(), 1);
  do {
    std::vector<std::size_t> basis;
    for (std::size_t c = 0; c < cells; ++c) {
      if (pick[c]) basis.push_back(c);
    }
    std::vector<std::vector<double>> a(rank, std::vector<double>(rank, 0.0));
    for (std::size_t k = 0; k < rank; ++k) {
      const std::size_t i = basis[k] / n;
      const std::size_t j = basis[k] % n;
      a[i][k] = 1.0;
      if (j + 1 < n) a[m + j][k] = 1.0;
    }
    std::vector<double> x;
    if (!Solve(a, rhs, x)) continue;
    if (std::any_of(x.begin(), x.end(), [](double v) { return v < -1e-12; })) continue;
    double total = 0.0;
    for (std::size_t k = 0; k < rank; ++k) {
      total += x[k] * cost(basis[k] / n, basis[k] % n);
    }
    best = std::min(best, total);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return best;
}

std::map<VertexId, VertexId> RandomRelabeling(Rng& rng, const Graph& g) {
  std::vector<VertexId> ids(1000);
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  std::map<VertexId, VertexId> mapping;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) mapping[g.vertices()[i]] = ids[i];
  return mapping;
}

}  // namespace ricci::testing
