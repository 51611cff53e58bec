#include "osn/ingestion/rate_limiter.hpp"

#include <stdexcept>

namespace osn::ingestion {

RateLimiter::RateLimiter(int capacity, std::chrono::seconds window)
    : capacity_(capacity), window_(window) {
  if (capacity < 0) throw std::invalid_argument("rate limiter capacity must be non-negative");
  if (window.count() <= 0) throw std::invalid_argument("rate limiter window must be positive");
}

PermitDecision RateLimiter::acquire(Instant now) {
  std::lock_guard lock(mu_);
  if (!window_start_ || now >= *window_start_ + window_) {
    window_start_ = now;
    consumed_ = 0;
  }
  if (consumed_ < capacity_) {
    ++consumed_;
    return {true, std::chrono::milliseconds{0}};
  }
  return {false, *window_start_ + window_ - now};
}

int RateLimiter::consumed() const {
  std::lock_guard lock(mu_);
  return consumed_;
}

}  // namespace osn::ingestion
