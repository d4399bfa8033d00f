#pragma once

#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace pwmf {

/// Caps the number of worker threads used by parallel_for; 0 restores
/// the hardware default.
void set_max_threads(int n);
int max_threads();

namespace detail {
extern thread_local bool inside_parallel_region;
}

/// Runs body(i) for every i in [begin, end), splitting the range into one
/// contiguous chunk per thread. Each index is evaluated by exactly one
/// body call, so results cannot depend on the thread count. Nested calls
/// run serially on the calling thread.
template <typename F>
void parallel_for(std::int64_t begin, std::int64_t end, F&& body) {
  const std::int64_t count = end - begin;
  if (count <= 0) return;
  std::int64_t threads = max_threads();
  if (threads > count) threads = count;
  if (threads <= 1 || detail::inside_parallel_region) {
    for (std::int64_t i = begin; i < end; ++i) body(i);
    return;
  }

  std::mutex error_mutex;
  std::exception_ptr first_error;
  auto run_chunk = [&](std::int64_t t) {
    detail::inside_parallel_region = true;
    const std::int64_t lo = begin + count * t / threads;
    const std::int64_t hi = begin + count * (t + 1) / threads;
    try {
      for (std::int64_t i = lo; i < hi; ++i) body(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
    detail::inside_parallel_region = false;
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads) - 1);
  for (std::int64_t t = 1; t < threads; ++t) pool.emplace_back(run_chunk, t);
  run_chunk(0);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace pwmf
