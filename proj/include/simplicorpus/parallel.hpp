#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace simplicorpus {

inline unsigned default_thread_count() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

/// Splits [0, count) into at most `threads` contiguous ranges and runs
/// body(begin, end) on each. The first exception thrown by a worker is
/// rethrown on the calling thread after all workers join.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(std::max(threads, 1u), count);
  if (workers <= 1) {
    if (count > 0) body(std::size_t{0}, count);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    const std::size_t step = (count + workers - 1) / workers;
    auto run = [&](std::size_t w) {
      const std::size_t begin = w * step;
      const std::size_t end = std::min(count, begin + step);
      if (begin >= end) return;
      try {
        body(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    };
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run, w);
    run(0);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace simplicorpus
