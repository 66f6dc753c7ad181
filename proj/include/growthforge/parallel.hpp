#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace growthforge {

// Worker count: GROWTHFORGE_THREADS caps hardware concurrency (min 1).
inline unsigned worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("GROWTHFORGE_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
  }
  return hw;
}

// Runs fn(i) for i in [0, count); results must be written to per-index slots
// by the caller so the outcome is independent of scheduling.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  unsigned workers = worker_count();
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk, hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace growthforge
