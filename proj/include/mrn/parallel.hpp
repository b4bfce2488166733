// SPDX-License-Identifier: Apache-2.0
//
// mrnsim: power-bandwidth tradeoff simulator for dense multi-antenna relay networks
// Copyright (C) 2026 The mrnsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef MRN_PARALLEL_HPP
#define MRN_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace mrn {

/// Worker count used by trial loops; 0 means std::thread::hardware_concurrency().
void set_worker_count(unsigned workers);
unsigned worker_count();

/// Calls fn(i) for i in [0, n) across worker threads using contiguous chunks.
/// fn must only write to state owned by index i. The first exception thrown by
/// any worker is rethrown on the calling thread.
template <typename Fn>
void parallel_for(std::int64_t n, Fn&& fn, unsigned workers = worker_count()) {
  if (n <= 0) return;
  if (workers <= 1 || n == 1) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const auto w = static_cast<std::int64_t>(std::min<std::int64_t>(workers, n));
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(w));
  for (std::int64_t t = 0; t < w; ++t) {
    pool.emplace_back([&, t] {
      const std::int64_t begin = n * t / w;
      const std::int64_t end = n * (t + 1) / w;
      try {
        for (std::int64_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace mrn

#endif  // MRN_PARALLEL_HPP
