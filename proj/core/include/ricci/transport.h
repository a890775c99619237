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

#ifndef RICCI_TRANSPORT_H_
#define RICCI_TRANSPORT_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ricci {

// Row-major cost matrix for a transportation problem.
class CostMatrix {
 public:
  CostMatrix() = default;
  CostMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Exact minimum of sum_ij x_ij * cost(i, j) over non-negative plans whose row
// sums are `supply` and column sums are `demand`.
//
// Primal-dual min-cost flow: Dijkstra on reduced costs raises the node
// potentials, then a blocking flow saturates every zero-reduced-cost path
// before the next raise. With integral supplies and costs every intermediate
// quantity is an integer and the result is exact.
//
// Throws DomainError if the totals differ by more than `tolerance` or any
// entry is negative.
double SolveTransport(std::span<const double> supply,
                      std::span<const double> demand, const CostMatrix& cost,
                      double tolerance = 1e-12);

// Integral variant on a dense row-major cost matrix (rows = supply.size()).
// Same algorithm without floating point; the answer is exact. Throws
// DomainError on negative entries or unequal totals.
std::int64_t SolveIntegerTransport(std::span<const std::int64_t> supply,
                                   std::span<const std::int64_t> demand,
                                   std::span<const int> cost);

}  // namespace ricci

#endif  // RICCI_TRANSPORT_H_
