#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace latpack {

// Worker count: machine parallelism capped by PESSIMUM_THREADS.
inline unsigned worker_count() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("PESSIMUM_THREADS")) {
    long cap = std::atol(env);
    if (cap >= 1 && static_cast<unsigned>(cap) < n) n = static_cast<unsigned>(cap);
  }
  return n;
}

// Runs fn(i) for i in [0, count) on the worker pool. Work items must be
// independent; callers are responsible for deterministic result merging.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  unsigned workers = worker_count();
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace latpack
