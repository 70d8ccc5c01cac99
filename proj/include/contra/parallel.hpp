#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace contra {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Splits [0, count) into contiguous chunks, one per worker, and calls
/// body(worker, begin, end). Exceptions from workers are rethrown.
template <typename Body>
void parallel_chunks(std::uint64_t count, unsigned threads, Body&& body) {
  unsigned workers = resolve_threads(threads);
  if (count < workers) workers = static_cast<unsigned>(std::max<std::uint64_t>(count, 1));
  if (workers == 1) {
    body(0U, std::uint64_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::uint64_t step = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t begin = std::min<std::uint64_t>(count, w * step);
    std::uint64_t end = std::min<std::uint64_t>(count, begin + step);
    pool.emplace_back([&, w, begin, end] {
      try {
        body(w, begin, end);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace contra
