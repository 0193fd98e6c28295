#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace distdist {

// Worker cap: DISTDIST_THREADS if set to a positive integer, otherwise the
// hardware concurrency.
std::size_t worker_count();

// Splits [0, n) into a fixed number of contiguous chunks (the split depends
// on n only, never on the worker count), evaluates fn(begin, end) for each
// chunk on up to worker_count() threads and returns the per-chunk results
// in chunk order. The caller merges them sequentially, so the final result
// does not depend on scheduling.
template <class R, class F>
std::vector<R> map_chunks(std::size_t n, F&& fn, std::size_t max_chunks = 64) {
  const std::size_t chunks = std::max<std::size_t>(1, std::min(n, max_chunks));
  std::vector<R> results(chunks);
  auto bounds = [&](std::size_t c) { return std::pair{n * c / chunks, n * (c + 1) / chunks}; };
  const std::size_t workers = std::min(worker_count(), chunks);
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) {
      auto [b, e] = bounds(c);
      results[c] = fn(b, e);
    }
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t c = next++; c < chunks; c = next++) {
      try {
        auto [b, e] = bounds(c);
        results[c] = fn(b, e);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace distdist
