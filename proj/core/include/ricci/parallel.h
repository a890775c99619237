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

#ifndef RICCI_PARALLEL_H_
#define RICCI_PARALLEL_H_

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace ricci {

// Worker count used when a caller passes threads <= 0: the RICCI_THREADS
// environment variable if set, else 1.
int DefaultThreadCount();

// Runs body(worker, begin, end) over contiguous chunks of [0, n). Chunks are
// fixed by (n, threads), so results written by index are deterministic.
template <typename Body>
void ParallelChunks(std::size_t n, int threads, Body&& body) {
  if (threads <= 0) threads = DefaultThreadCount();
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(threads), n));
  if (workers == 1) {
    body(0, std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, w, begin, end] { body(static_cast<int>(w), begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace ricci

#endif  // RICCI_PARALLEL_H_
