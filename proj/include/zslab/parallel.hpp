#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace zslab {

// Worker count resolution: explicit value, else ZSLAB_JOBS, else hardware.
inline int resolve_jobs(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("ZSLAB_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? (int)hw : 1;
}

// Runs fn(task_index) for all indices in [0, count) on `jobs` threads.
// Indices are claimed from a shared counter; fn must not assume any order.
template <class Fn>
inline void parallel_tasks(int jobs, std::size_t count, Fn&& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      fn(i);
    }
  };
  std::vector<std::thread> threads;
  int n = std::min<int>(jobs, (int)count);
  threads.reserve(n);
  for (int t = 0; t < n; ++t) threads.emplace_back(worker);
  for (auto& th : threads) th.join();
}

}  // namespace zslab
