#ifndef STS_DETAIL_PARALLEL_HPP
#define STS_DETAIL_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace sts::detail {

// Runs task(i) for i in [0, count) on up to `workers` threads. Tasks are
// handed out in index order; task(i) returning false stops further hand-out.
template <typename Task>
void for_each_task(std::size_t count, int workers, Task&& task) {
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto run = [&] {
    while (!stop.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      if (!task(i)) stop.store(true, std::memory_order_relaxed);
    }
  };
  const int threads =
      static_cast<int>(std::min<std::size_t>(std::max(workers, 1), count));
  if (threads <= 1) {
    run();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back(run);
}

}  // namespace sts::detail

#endif  // STS_DETAIL_PARALLEL_HPP
