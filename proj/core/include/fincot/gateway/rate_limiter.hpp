#pragma once

#include <chrono>
#include <deque>
#include <mutex>
#include <vector>

#include "fincot/gateway/clock.hpp"

namespace fincot::gateway {

// Sliding-window limiter: at most `per_minute` acquisitions in any 60s
// window. acquire() blocks (via the clock's sleep) until a slot opens.
class RateLimiter {
public:
    RateLimiter(int per_minute, Clock clock);

    void acquire();

    // Timestamps handed out so far, for window audits in tests.
    std::vector<std::chrono::steady_clock::time_point> issue_times() const;

private:
    int per_minute_;
    Clock clock_;
    mutable std::mutex mutex_;
    std::deque<std::chrono::steady_clock::time_point> window_;
    std::vector<std::chrono::steady_clock::time_point> issued_;
};

}  // namespace fincot::gateway
