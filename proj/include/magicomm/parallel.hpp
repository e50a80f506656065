// Copyright 2026 The magicomm authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MAGICOMM_PARALLEL_HPP
#define MAGICOMM_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace magicomm {

inline size_t worker_count() {
  if (const char *env = std::getenv("MAGICOMM_THREADS")) {
    long v = std::atol(env);
    if (v >= 1) {
      return static_cast<size_t>(v);
    }
  }
  size_t hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Runs fn(i) for i in [0, n). Work items must be independent; results are
// written by index so the outcome does not depend on the schedule.
inline void parallel_for(size_t n, const std::function<void(size_t)> &fn) {
  size_t workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (size_t i = 0; i < n; i++) {
      fn(i);
    }
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::atomic<bool> failed{false};
  pool.reserve(workers);
  for (size_t w = 0; w < workers; w++) {
    pool.emplace_back([&]() {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= n || failed.load()) {
          return;
        }
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) {
            err = std::current_exception();
          }
          return;
        }
      }
    });
  }
  for (auto &t : pool) {
    t.join();
  }
  if (failed.load()) {
    std::rethrow_exception(err);
  }
}

}  // namespace magicomm

#endif
