#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace simplefold {

/// Runs fn(i) for i in [0, n) on up to `workers` threads (0 = hardware
/// concurrency). fn must only write to per-index storage.
template <class Fn>
void parallel_for(std::size_t n, std::size_t workers, Fn&& fn) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(n, 1));
  std::atomic<std::size_t> next{0};
  auto loop = [&] {
    for (std::size_t i = next++; i < n; i = next++) fn(i);
  };
  if (workers == 1) {
    loop();
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(loop);
  for (auto& t : pool) t.join();
}

}  // namespace simplefold
