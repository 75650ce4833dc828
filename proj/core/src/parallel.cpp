#include "shiftlab/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace shiftlab {

int worker_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("SHIFTLAB_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1) n = std::min(n, cap);
    } catch (...) {
      // ignore malformed values, keep the hardware default
    }
  }
  return n;
}

void parallel_chunks(std::int64_t total,
                     const std::function<void(std::int64_t, std::int64_t)>& fn) {
  if (total <= 0) return;
  const int workers = static_cast<int>(std::min<std::int64_t>(worker_count(), total));
  if (workers <= 1) {
    fn(0, total);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(static_cast<size_t>(workers));
  const std::int64_t step = (total + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const std::int64_t begin = static_cast<std::int64_t>(w) * step;
    const std::int64_t end = std::min(total, begin + step);
    if (begin >= end) break;
    threads.emplace_back([&fn, begin, end]() { fn(begin, end); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace shiftlab
