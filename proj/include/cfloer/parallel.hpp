#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cfloer {

/// Evaluates fn(0), ..., fn(count-1) on up to `jobs` threads and returns the
/// results in index order. The first exception thrown by any cell is rethrown.
template <class Fn>
auto parallel_map(std::size_t count, unsigned jobs, Fn&& fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using R = decltype(fn(std::size_t{}));
  std::vector<R> out(count);
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < jobs; ++t)
      workers.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
          try {
            out[i] = fn(i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(error_mu);
            if (!error) error = std::current_exception();
          }
        }
      });
  }
  if (error) std::rethrow_exception(error);
  return out;
}

/// Like parallel_map, but hands results to sink(i, result) in index order as
/// each block of cells completes, so long scans produce output incrementally.
template <class Fn, class Sink>
void parallel_for_each_ordered(std::size_t count, unsigned jobs, Fn&& fn, Sink&& sink, std::size_t block = 256) {
  for (std::size_t start = 0; start < count; start += block) {
    const std::size_t len = std::min(block, count - start);
    auto results = parallel_map(len, jobs, [&](std::size_t i) { return fn(start + i); });
    for (std::size_t i = 0; i < len; ++i) sink(start + i, results[i]);
  }
}

}  // namespace cfloer
