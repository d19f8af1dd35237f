#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace littlewood {

/// Environment variable holding the default worker count.
inline constexpr const char* kThreadsEnvVar = "LITTLEWOOD_THREADS";

/// LITTLEWOOD_THREADS when set to a positive integer, otherwise the hardware
/// concurrency (at least 1).
std::size_t default_thread_count();

/// Resolves a user request: 0 means default_thread_count().
inline std::size_t resolve_threads(std::size_t requested) {
  return requested == 0 ? default_thread_count() : requested;
}

/// Runs body(task) for task = 0 .. tasks-1 on up to `threads` workers.  Tasks
/// are claimed dynamically, so callers must write results into per-task slots
/// and merge them afterwards in task order.  The first exception thrown by a
/// task is rethrown on the calling thread.
template <typename Body>
void parallel_tasks(std::size_t tasks, std::size_t threads, Body&& body) {
  threads = std::max<std::size_t>(1, std::min(resolve_threads(threads), tasks));
  if (threads <= 1) {
    for (std::size_t t = 0; t < tasks; ++t) body(t);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1, std::memory_order_relaxed);
      if (t >= tasks) return;
      try {
        body(t);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(tasks, std::memory_order_relaxed);
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads - 1);
    for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace littlewood
