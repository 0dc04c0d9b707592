#pragma once

#include <chrono>
#include <functional>

namespace fincot::gateway {

// Injectable time source so rate limiting and backoff can run against
// simulated time in tests.
struct Clock {
    std::function<std::chrono::steady_clock::time_point()> now;
    std::function<void(std::chrono::milliseconds)> sleep;

    static Clock system();
};

}  // namespace fincot::gateway
