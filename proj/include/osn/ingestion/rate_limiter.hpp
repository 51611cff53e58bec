#pragma once

#include <chrono>
#include <mutex>

#include "osn/common/time.hpp"

namespace osn::ingestion {

struct PermitDecision {
  bool granted = false;
  std::chrono::milliseconds retry_after{0};  // zero when granted

  explicit operator bool() const { return granted; }
};

/// Fixed-window permit counter shared by every upstream caller. The window
/// starts at the first acquisition and rolls over exactly at start + window.
class RateLimiter {
 public:
  explicit RateLimiter(int capacity = 450, std::chrono::seconds window = std::chrono::seconds{900});

  PermitDecision acquire(Instant now);

  int capacity() const { return capacity_; }
  std::chrono::milliseconds window() const { return window_; }
  int consumed() const;

 private:
  mutable std::mutex mu_;
  int capacity_;
  std::chrono::milliseconds window_;
  int consumed_ = 0;
  std::optional<Instant> window_start_;
};

}  // namespace osn::ingestion
