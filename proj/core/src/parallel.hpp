#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace probrob::detail {

inline std::size_t resolve_threads(std::size_t requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs body(task) for task in [0, tasks) on up to `threads` workers with a
/// static contiguous partition.  If several tasks throw, the exception of the
/// lowest-numbered failing worker chunk is rethrown, so failures are reported
/// the same way for every thread count.
template <class Body>
void parallel_for(std::size_t tasks, std::size_t threads, Body&& body) {
  threads = std::min(resolve_threads(threads), tasks);
  if (threads <= 1) {
    for (std::size_t t = 0; t < tasks; ++t) body(t);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w) {
      const std::size_t lo = tasks * w / threads;
      const std::size_t hi = tasks * (w + 1) / threads;
      workers.emplace_back([&, lo, hi, w] {
        try {
          for (std::size_t t = lo; t < hi; ++t) body(t);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace probrob::detail
