// parallel.hpp - fixed-size worker pool over an index range

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace qrc {

/// Calls job(i) for i in [0, n) on `workers` threads. Jobs are claimed in
/// index order; callers write results into slot i so the output order never
/// depends on scheduling. The exception from the lowest failing index is
/// rethrown after all workers stop.
template <class Job>
void parallel_for(std::size_t n, int workers, Job&& job) {
  const auto n_threads = static_cast<std::size_t>(std::max(1, workers));
  if (n_threads == 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      job(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::vector<std::exception_ptr> errors(n);
  auto worker = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n)
        return;
      try {
        job(i);
      } catch (...) {
        errors[i] = std::current_exception();
        failed.store(true);
      }
    }
  };

  std::vector<std::jthread> pool;
  pool.reserve(std::min(n_threads, n));
  for (std::size_t t = 0; t < std::min(n_threads, n); ++t)
    pool.emplace_back(worker);
  pool.clear();

  for (auto& e : errors)
    if (e)
      std::rethrow_exception(e);
}

} // namespace qrc
