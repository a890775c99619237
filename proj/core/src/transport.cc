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

#include "ricci/transport.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "ricci/errors.h"

namespace ricci {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Residual network in compressed (CSR) form. Buffers are reused between
// solves so repeated small problems do not allocate.
class FlowNetwork {
 public:
  void Reset(int nodes) {
    nodes_ = nodes;
    pending_.clear();
  }

  void AddArc(int from, int to, double capacity, double cost) {
    pending_.push_back({from, to, capacity, cost});
  }

  // Lays the pending arcs (and their reverses) out contiguously per node.
  void Finalize() {
    const int n = nodes_;
    start_.assign(n + 1, 0);
    for (const Pending& p : pending_) {
      ++start_[p.from + 1];
      ++start_[p.to + 1];
    }
    for (int v = 0; v < n; ++v) start_[v + 1] += start_[v];
    const int total = start_[n];
    to_.resize(total);
    rev_.resize(total);
    residual_.resize(total);
    cost_.resize(total);
    fill_.assign(start_.begin(), start_.end() - 1);
    for (const Pending& p : pending_) {
      const int a = fill_[p.from]++;
      const int b = fill_[p.to]++;
      to_[a] = p.to;
      rev_[a] = b;
      residual_[a] = p.capacity;
      cost_[a] = p.cost;
      to_[b] = p.from;
      rev_[b] = a;
      residual_[b] = 0.0;
      cost_[b] = -p.cost;
    }
  }

  // Cost of a minimum-cost flow of value `target` from source to sink.
  double MinCostFlow(int source, int sink, double target, double cap_eps,
                     double cost_eps) {
    potential_.assign(nodes_, 0.0);
    double sent = 0.0;
    while (target - sent > cap_eps) {
      if (!RaisePotentials(source, sink, cap_eps)) break;
      while (target - sent > cap_eps && BuildLevels(source, sink, cap_eps, cost_eps)) {
        next_arc_.assign(start_.begin(), start_.end() - 1);
        for (;;) {
          const double pushed = Push(source, sink, target - sent, cap_eps, cost_eps);
          if (pushed <= cap_eps) break;
          sent += pushed;
        }
      }
    }
    if (target - sent > cap_eps) throw DomainError("transport problem is infeasible");

    double total = 0.0;
    for (std::size_t a = 0; a < to_.size(); ++a) {
      if (cost_[a] > 0.0) total += residual_[rev_[a]] * cost_[a];
    }
    return total;
  }

 private:
  struct Pending {
    int from;
    int to;
    double capacity;
    double cost;
  };

  double Reduced(int u, int a) const {
    return cost_[a] + potential_[u] - potential_[to_[a]];
  }

  // Dense Dijkstra on reduced costs, then shift potentials so that every
  // shortest path to the sink has zero reduced cost. False if the sink is
  // unreachable.
  bool RaisePotentials(int source, int sink, double cap_eps) {
    dist_.assign(nodes_, kInf);
    done_.assign(nodes_, 0);
    dist_[source] = 0.0;
    for (int iter = 0; iter < nodes_; ++iter) {
      int u = -1;
      double best = kInf;
      for (int v = 0; v < nodes_; ++v) {
        if (!done_[v] && dist_[v] < best) {
          best = dist_[v];
          u = v;
        }
      }
      if (u < 0) break;
      done_[u] = 1;
      for (int a = start_[u]; a < start_[u + 1]; ++a) {
        if (residual_[a] <= cap_eps) continue;
        const double nd = best + std::max(0.0, Reduced(u, a));
        if (nd < dist_[to_[a]]) dist_[to_[a]] = nd;
      }
    }
    const double reach = dist_[sink];
    if (reach == kInf) return false;
    for (int v = 0; v < nodes_; ++v) potential_[v] += std::min(dist_[v], reach);
    return true;
  }

  bool BuildLevels(int source, int sink, double cap_eps, double cost_eps) {
    level_.assign(nodes_, -1);
    queue_.clear();
    queue_.push_back(source);
    level_[source] = 0;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const int u = queue_[head];
      for (int a = start_[u]; a < start_[u + 1]; ++a) {
        const int v = to_[a];
        if (level_[v] < 0 && residual_[a] > cap_eps &&
            std::abs(Reduced(u, a)) <= cost_eps) {
          level_[v] = level_[u] + 1;
          queue_.push_back(v);
        }
      }
    }
    return level_[sink] >= 0;
  }

  double Push(int u, int sink, double limit, double cap_eps, double cost_eps) {
    if (u == sink) return limit;
    for (int& a = next_arc_[u]; a < start_[u + 1]; ++a) {
      const int v = to_[a];
      if (residual_[a] <= cap_eps || level_[v] != level_[u] + 1 ||
          std::abs(Reduced(u, a)) > cost_eps) {
        continue;
      }
      const double got = Push(v, sink, std::min(limit, residual_[a]), cap_eps, cost_eps);
      if (got > cap_eps) {
        residual_[a] -= got;
        residual_[rev_[a]] += got;
        return got;
      }
    }
    return 0.0;
  }

  int nodes_ = 0;
  std::vector<Pending> pending_;
  std::vector<int> start_, fill_, to_, rev_;
  std::vector<double> residual_, cost_;
  std::vector<double> potential_, dist_;
  std::vector<char> done_;
  std::vector<int> level_, queue_, next_arc_;
};

// Bipartite residual network for integral transport. Row i sends to any
// column j at reduced cost cost(i, j) + row_pot[i] - col_pot[j]; flow already
// placed on (i, j) can be pulled back from column j at zero reduced cost.
class IntegerTransport {
 public:
  std::int64_t Solve(std::span<const std::int64_t> supply,
                     std::span<const std::int64_t> demand,
                     std::span<const int> cost) {
    m_ = static_cast<int>(supply.size());
    n_ = static_cast<int>(demand.size());
    cost_ = cost.data();
    row_left_.assign(supply.begin(), supply.end());
    col_left_.assign(demand.begin(), demand.end());
    flow_.assign(static_cast<std::size_t>(m_) * n_, 0);
    row_pot_.assign(m_, 0);
    col_pot_.assign(n_, 0);
    std::int64_t remaining = std::accumulate(supply.begin(), supply.end(), std::int64_t{0});
    while (remaining > 0) {
      if (!RaisePotentials()) throw DomainError("transport problem is infeasible");
      while (remaining > 0 && BuildLevels()) {
        row_arc_.assign(m_, 0);
        col_arc_.assign(n_, -1);
        for (int i = 0; i < m_ && remaining > 0; ++i) {
          while (row_left_[i] > 0 && row_level_[i] == 1) {
            const std::int64_t pushed = PushRow(i, row_left_[i]);
            if (pushed == 0) break;
            row_left_[i] -= pushed;
            remaining -= pushed;
          }
        }
      }
    }
    std::int64_t total = 0;
    for (std::size_t k = 0; k < flow_.size(); ++k) total += flow_[k] * cost_[k];
    return total;
  }

 private:
  static constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max();

  std::int64_t Reduced(int i, int j) const {
    return cost_[static_cast<std::size_t>(i) * n_ + j] + row_pot_[i] - col_pot_[j];
  }
  std::int64_t& Flow(int i, int j) { return flow_[static_cast<std::size_t>(i) * n_ + j]; }

  // Dense Dijkstra from the rows with supply left. Stops at the first column
  // with demand left; false if there is none reachable.
  bool RaisePotentials() {
    row_dist_.assign(m_, kUnreached);
    col_dist_.assign(n_, kUnreached);
    row_done_.assign(m_, 0);
    col_done_.assign(n_, 0);
    for (int i = 0; i < m_; ++i) {
      if (row_left_[i] > 0) row_dist_[i] = 0;
    }
    std::int64_t reach = kUnreached;
    for (;;) {
      int best_row = -1;
      int best_col = -1;
      std::int64_t best = kUnreached;
      for (int i = 0; i < m_; ++i) {
        if (!row_done_[i] && row_dist_[i] < best) {
          best = row_dist_[i];
          best_row = i;
        }
      }
      for (int j = 0; j < n_; ++j) {
        if (!col_done_[j] && col_dist_[j] < best) {
          best = col_dist_[j];
          best_col = j;
          best_row = -1;
        }
      }
      if (best == kUnreached) break;
      if (best_col >= 0) {
        col_done_[best_col] = 1;
        if (col_left_[best_col] > 0) {
          reach = best;
          break;
        }
        for (int i = 0; i < m_; ++i) {
          if (!row_done_[i] && Flow(i, best_col) > 0 && best < row_dist_[i]) {
            row_dist_[i] = best;
          }
        }
      } else {
        row_done_[best_row] = 1;
        for (int j = 0; j < n_; ++j) {
          if (col_done_[j]) continue;
          const std::int64_t d = best + Reduced(best_row, j);
          if (d < col_dist_[j]) col_dist_[j] = d;
        }
      }
    }
    if (reach == kUnreached) return false;
    for (int i = 0; i < m_; ++i) row_pot_[i] += std::min(row_dist_[i], reach);
    for (int j = 0; j < n_; ++j) col_pot_[j] += std::min(col_dist_[j], reach);
    return true;
  }

  // BFS levels over zero-reduced-cost residual arcs. Rows with supply left
  // sit at level 1 (the implicit source is level 0). Returns whether some
  // column with demand left is reachable; sink_level_ is one past it.
  bool BuildLevels() {
    row_level_.assign(m_, -1);
    col_level_.assign(n_, -1);
    queue_.clear();
    for (int i = 0; i < m_; ++i) {
      if (row_left_[i] > 0) {
        row_level_[i] = 1;
        queue_.push_back(i);
      }
    }
    sink_level_ = -1;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const int node = queue_[head];
      if (node < m_) {
        for (int j = 0; j < n_; ++j) {
          if (col_level_[j] < 0 && Reduced(node, j) == 0) {
            col_level_[j] = row_level_[node] + 1;
            if (col_left_[j] > 0 && sink_level_ < 0) sink_level_ = col_level_[j] + 1;
            queue_.push_back(m_ + j);
          }
        }
      } else {
        const int j = node - m_;
        if (sink_level_ >= 0 && col_level_[j] + 1 >= sink_level_) continue;
        for (int i = 0; i < m_; ++i) {
          if (row_level_[i] < 0 && Flow(i, j) > 0) {
            row_level_[i] = col_level_[j] + 1;
            queue_.push_back(i);
          }
        }
      }
    }
    return sink_level_ >= 0;
  }

  std::int64_t PushRow(int i, std::int64_t limit) {
    for (int& j = row_arc_[i]; j < n_; ++j) {
      if (col_level_[j] != row_level_[i] + 1 || Reduced(i, j) != 0) continue;
      const std::int64_t got = PushCol(j, limit);
      if (got > 0) {
        Flow(i, j) += got;
        return got;
      }
    }
    return 0;
  }

  // Column arcs: index -1 is the arc to the sink, then rows 0..m-1 backwards.
  std::int64_t PushCol(int j, std::int64_t limit) {
    for (int& a = col_arc_[j]; a < m_; ++a) {
      if (a < 0) {
        if (col_left_[j] > 0 && col_level_[j] + 1 == sink_level_) {
          const std::int64_t got = std::min(limit, col_left_[j]);
          col_left_[j] -= got;
          if (col_left_[j] > 0) return got;
          ++a;
          return got;
        }
        continue;
      }
      const std::int64_t back = Flow(a, j);
      if (back <= 0 || row_level_[a] != col_level_[j] + 1) continue;
      const std::int64_t got = PushRow(a, std::min(limit, back));
      if (got > 0) {
        Flow(a, j) -= got;
        return got;
      }
    }
    return 0;
  }

  int m_ = 0;
  int n_ = 0;
  const int* cost_ = nullptr;
  std::vector<std::int64_t> row_left_, col_left_, flow_;
  std::vector<std::int64_t> row_pot_, col_pot_, row_dist_, col_dist_;
  std::vector<char> row_done_, col_done_;
  std::vector<int> row_level_, col_level_, queue_, row_arc_, col_arc_;
  int sink_level_ = -1;
};

}  // namespace

double SolveTransport(std::span<const double> supply,
                      std::span<const double> demand, const CostMatrix& cost,
                      double tolerance) {
  if (cost.rows() != supply.size() || cost.cols() != demand.size()) {
    throw ContractViolation("transport: cost matrix shape does not match marginals");
  }
  for (double s : supply) {
    if (!(s >= 0.0)) throw DomainError("transport: negative supply");
  }
  for (double d : demand) {
    if (!(d >= 0.0)) throw DomainError("transport: negative demand");
  }
  const double total_supply = std::accumulate(supply.begin(), supply.end(), 0.0);
  const double total_demand = std::accumulate(demand.begin(), demand.end(), 0.0);
  const double scale = std::max({1.0, total_supply, total_demand});
  if (std::abs(total_supply - total_demand) > tolerance * scale) {
    throw DomainError("transport: supply total " + std::to_string(total_supply) +
                      " differs from demand total " + std::to_string(total_demand));
  }
  if (total_supply == 0.0) return 0.0;

  double max_cost = 0.0;
  for (std::size_t i = 0; i < cost.rows(); ++i) {
    for (std::size_t j = 0; j < cost.cols(); ++j) {
      if (!(cost(i, j) >= 0.0)) throw DomainError("transport: negative cost");
      max_cost = std::max(max_cost, cost(i, j));
    }
  }

  const int m = static_cast<int>(supply.size());
  const int n = static_cast<int>(demand.size());
  const int source = m + n;
  const int sink = m + n + 1;
  thread_local FlowNetwork net;
  net.Reset(m + n + 2);
  for (int i = 0; i < m; ++i) {
    if (supply[i] > 0.0) net.AddArc(source, i, supply[i], 0.0);
  }
  for (int i = 0; i < m; ++i) {
    if (supply[i] <= 0.0) continue;
    for (int j = 0; j < n; ++j) {
      if (demand[j] <= 0.0) continue;
      net.AddArc(i, m + j, std::min(supply[i], demand[j]), cost(i, j));
    }
  }
  for (int j = 0; j < n; ++j) {
    if (demand[j] > 0.0) net.AddArc(m + j, sink, demand[j], 0.0);
  }
  net.Finalize();
  const double target = std::min(total_supply, total_demand);
  const double cap_eps = 1e-14 * scale;
  const double cost_eps = 1e-9 * std::max(1.0, max_cost);
  return net.MinCostFlow(source, sink, target, cap_eps, cost_eps);
}

}  // namespace ricci

namespace ricci {

std::int64_t SolveIntegerTransport(std::span<const std::int64_t> supply,
                                   std::span<const std::int64_t> demand,
                                   std::span<const int> cost) {
  if (cost.size() != supply.size() * demand.size()) {
    throw ContractViolation("transport: cost matrix shape does not match marginals");
  }
  std::int64_t total_supply = 0;
  std::int64_t total_demand = 0;
  for (std::int64_t s : supply) {
    if (s < 0) throw DomainError("transport: negative supply");
    total_supply += s;
  }
  for (std::int64_t d : demand) {
    if (d < 0) throw DomainError("transport: negative demand");
    total_demand += d;
  }
  for (int c : cost) {
    if (c < 0) throw DomainError("transport: negative cost");
  }
  if (total_supply != total_demand) {
    throw DomainError("transport: supply total " + std::to_string(total_supply) +
                      " differs from demand total " + std::to_string(total_demand));
  }
  thread_local IntegerTransport solver;
  return solver.Solve(supply, demand, cost);
}

}  // namespace ricci
