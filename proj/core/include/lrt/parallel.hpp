#pragma once

#include <cstdint>
#include <functional>

namespace lrt {

// Process-wide worker count for parallel_for. 1 = serial (default).
void set_thread_count(int n);
int thread_count();

// Splits [0, n) into contiguous blocks, one per worker. Each index must be
// written by at most one iteration; reductions stay serial elsewhere so
// results are identical for every thread count.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& block_fn);

}  // namespace lrt
