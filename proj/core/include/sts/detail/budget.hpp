#ifndef STS_DETAIL_BUDGET_HPP
#define STS_DETAIL_BUDGET_HPP

#include <atomic>
#include <chrono>
#include <cstdint>

namespace sts::detail {

// Shared node/time meter for one search. Workers call tick() once per node;
// the clock is only read every kStride nodes.
class BudgetMeter {
 public:
  static constexpr std::uint64_t kStride = 4096;

  BudgetMeter(std::uint64_t max_nodes, double max_seconds)
      : max_nodes_(max_nodes),
        max_seconds_(max_seconds),
        start_(std::chrono::steady_clock::now()) {}

  // Returns false once the budget is exhausted.
  bool tick() {
    if (exhausted_.load(std::memory_order_relaxed)) return false;
    const std::uint64_t count =
        nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (count > max_nodes_) {
      exhausted_.store(true, std::memory_order_relaxed);
      return false;
    }
    if (count % kStride == 0 && seconds() > max_seconds_) {
      exhausted_.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
  std::uint64_t nodes() const {
    const auto n = nodes_.load(std::memory_order_relaxed);
    return n > max_nodes_ ? max_nodes_ : n;
  }
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::uint64_t max_nodes_;
  double max_seconds_;
  std::chrono::steady_clock::time_point start_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> exhausted_{false};
};

}  // namespace sts::detail

#endif  // STS_DETAIL_BUDGET_HPP
