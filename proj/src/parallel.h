// Copyright 2026 The motifclust Authors
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

#ifndef MOTIFCLUST_SRC_PARALLEL_H_
#define MOTIFCLUST_SRC_PARALLEL_H_

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace motifclust::internal {

// Runs body(worker) for worker in [0, workers) and joins. Callers reduce
// per-worker results in worker order, so output never depends on scheduling.
template <class Body>
void run_workers(int workers, Body&& body) {
  workers = std::max(workers, 1);
  if (workers == 1) {
    body(0);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        body(w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace motifclust::internal

#endif  // MOTIFCLUST_SRC_PARALLEL_H_
