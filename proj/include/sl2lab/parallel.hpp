#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace sl2lab {

/// Runs fn(i) for i in [0, count) on up to `workers` threads. Work items
/// must be independent and write only to their own output slots; reductions
/// happen afterwards, so numerical results never depend on the schedule.
inline void parallel_for(uint64_t count, unsigned workers,
                         const std::function<void(uint64_t)>& fn) {
  if (count == 0) return;
  if (workers <= 1 || count == 1) {
    for (uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const unsigned n_threads = (unsigned)std::min<uint64_t>(workers, count);
  std::atomic<uint64_t> cursor{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (unsigned t = 0; t < n_threads; ++t) {
    pool.emplace_back([&]() {
      while (!failed.load(std::memory_order_relaxed)) {
        const uint64_t i = cursor.fetch_add(1, std::memory_order_relaxed);
        if (i >= count) break;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          failed.store(true, std::memory_order_relaxed);
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

inline unsigned default_worker_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace sl2lab
