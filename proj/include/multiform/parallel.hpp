#pragma once

// Deterministic data parallelism. Work items are indexed; results are written
// by index, so the outcome never depends on the schedule or worker count.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace multiform {

// Process-wide worker cap; 0 means hardware concurrency.
void set_worker_count(unsigned n);
unsigned worker_count();

// Calls body(i) for every i in [0, n). The first exception (by index) is
// rethrown after all workers stop.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::size_t err_index = n;
  std::exception_ptr err;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(err_mu);
        if (i < err_index) {
          err_index = i;
          err = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

// Smallest i in [0, n) with pred(i) true, or nullopt. Workers skip indices
// above the best hit found so far.
template <class Pred>
std::optional<std::size_t> parallel_find_first(std::size_t n, Pred&& pred) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      if (pred(i)) return i;
    }
    return std::nullopt;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{n};
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n || i >= best.load()) return;
      if (pred(i)) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  const std::size_t b = best.load();
  if (b == n) return std::nullopt;
  return b;
}

}  // namespace multiform
