#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace assoc_lab {

/// Worker count: ASSOC_LAB_THREADS if set to a positive integer, else the
/// hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("ASSOC_LAB_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (...) {
    }
    return 1;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/// Runs body(i) for i in [0, n) on up to worker_count() threads.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  unsigned workers = std::min<std::size_t>(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace assoc_lab
