//
// rolekit - scale-dependent node roles
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROLEKIT_PARALLEL_H_
#define ROLEKIT_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rolekit {

// Calls fn(i) for i in [0, n) on up to `jobs` threads. Each index is visited
// exactly once; the first exception thrown by any call is rethrown here.
template <class Fn>
void parallel_for(std::size_t n, int jobs, Fn &&fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      fn(i);
    return;
  }

  std::atomic<std::size_t> next { 0 };
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error)
          error = std::current_exception();
        next.store(n);
      }
    }
  };

  std::vector<std::jthread> threads;
  const std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
  for (std::size_t t = 1; t < count; ++t)
    threads.emplace_back(worker);
  worker();
  threads.clear();

  if (error)
    std::rethrow_exception(error);
}

}  // namespace rolekit

#endif  // ROLEKIT_PARALLEL_H_
