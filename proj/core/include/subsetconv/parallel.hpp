#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace subsetconv {

// Worker cap from SUBSETCONV_THREADS (positive integer), else hardware concurrency.
// Throws InvalidArgument when the variable is set but malformed.
unsigned configured_threads();

// Runs body(i) for i in [0, count). Iterations must write disjoint outputs;
// results are then independent of the schedule. The first exception thrown
// by any iteration is rethrown on the caller.
template <class Body>
void parallel_for(std::size_t count, Body&& body, bool allow_parallel = true) {
  unsigned workers = allow_parallel ? std::min<std::size_t>(configured_threads(), count) : 1;
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace subsetconv
