#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace exckit {

/// 0 resolves to the hardware concurrency (at least 1).
inline unsigned resolve_thread_count(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Evaluates fn(0..jobs-1) on up to `threads` workers and returns the results
/// in job order, so a reduction over them is deterministic regardless of the
/// thread count. The first exception thrown by a job is rethrown.
template <typename T, typename Fn>
std::vector<T> ordered_parallel_map(std::size_t jobs, unsigned threads, Fn&& fn) {
  std::vector<T> results(jobs);
  if (jobs == 0) return results;

  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(resolve_thread_count(threads), jobs));
  if (workers <= 1) {
    for (std::size_t i = 0; i < jobs; ++i) results[i] = fn(i);
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs || failed.load()) return;
      try {
        results[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failed.load()) std::rethrow_exception(error);
  return results;
}

}  // namespace exckit
