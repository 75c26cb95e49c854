#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace flow3::detail {

// Runs fn(i) for every i in [0, total). Work is strided across jobs threads;
// every index is always processed so aggregated results cannot depend on the
// schedule.
inline void parallel_for(std::uint64_t total, unsigned jobs,
                         const std::function<void(std::uint64_t)>& fn) {
  if (jobs <= 1 || total < 2) {
    for (std::uint64_t i = 0; i < total; ++i) fn(i);
    return;
  }
  unsigned workers = jobs;
  if (workers > total) workers = static_cast<unsigned>(total);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (std::uint64_t i = w; i < total; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace flow3::detail
