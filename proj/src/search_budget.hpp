#pragma once

#include <chrono>
#include <cstdint>

#include "tdom/domination.hpp"

namespace tdom::detail {

// Node counter plus wall clock; once exhausted it stays exhausted.
class SearchBudget {
 public:
  using Clock = std::chrono::steady_clock;

  explicit SearchBudget(const Budget& b) : max_nodes_(b.max_nodes), limit_(b.time_limit), start_(Clock::now()) {}

  // Counts one node; false once either limit is hit.
  bool tick() {
    if (exhausted_) return false;
    if (++nodes_ > max_nodes_) {
      exhausted_ = true;
    } else if ((nodes_ & 1023U) == 0 && Clock::now() - start_ > limit_) {
      exhausted_ = true;
    }
    return !exhausted_;
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
  }

 private:
  std::uint64_t max_nodes_;
  std::chrono::milliseconds limit_;
  Clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace tdom::detail
