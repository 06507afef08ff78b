#include "lrt/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace lrt {

namespace {
std::atomic<int> g_threads{1};
}

void set_thread_count(int n) {
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  g_threads.store(std::max(1, n));
}

int thread_count() { return g_threads.load(); }

void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& block_fn) {
  const int nw = std::min<std::int64_t>(thread_count(), std::max<std::int64_t>(n, 1));
  if (nw <= 1 || n <= 1) {
    block_fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nw);
  const std::int64_t chunk = (n + nw - 1) / nw;
  for (int w = 0; w < nw; ++w) {
    const std::int64_t lo = w * chunk;
    const std::int64_t hi = std::min<std::int64_t>(lo + chunk, n);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] { block_fn(lo, hi); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace lrt
