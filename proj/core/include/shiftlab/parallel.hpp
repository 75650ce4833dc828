#pragma once

#include <cstdint>
#include <functional>

namespace shiftlab {

// Worker count: min(hardware_concurrency, SHIFTLAB_THREADS) with a floor of 1.
int worker_count();

// Runs fn(begin, end) over a partition of [0, total) on worker_count()
// threads. The partition depends only on `total`, so reductions that are
// order-insensitive per chunk stay deterministic.
void parallel_chunks(std::int64_t total,
                     const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace shiftlab
