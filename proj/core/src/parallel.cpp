#include "pwmf/parallel.hpp"

#include <atomic>

namespace pwmf {

namespace {
std::atomic<int> g_max_threads{0};
}

namespace detail {
thread_local bool inside_parallel_region = false;
}

void set_max_threads(int n) { g_max_threads.store(n < 0 ? 0 : n); }

int max_threads() {
  const int n = g_max_threads.load();
  if (n > 0) return n;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace pwmf
