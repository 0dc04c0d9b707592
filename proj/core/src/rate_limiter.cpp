#include "fincot/gateway/rate_limiter.hpp"

#include <thread>

namespace fincot::gateway {

using namespace std::chrono;

Clock Clock::system() {
    return Clock{
        [] { return steady_clock::now(); },
        [](milliseconds d) { std::this_thread::sleep_for(d); },
    };
}

RateLimiter::RateLimiter(int per_minute, Clock clock)
    : per_minute_(per_minute), clock_(std::move(clock)) {}

void RateLimiter::acquire() {
    while (true) {
        milliseconds wait{0};
        {
            std::lock_guard lock(mutex_);
            auto now = clock_.now();
            while (!window_.empty() && now - window_.front() >= 60s) {
                window_.pop_front();
            }
            if (static_cast<int>(window_.size()) < per_minute_) {
                window_.push_back(now);
                issued_.push_back(now);
                return;
            }
            wait = duration_cast<milliseconds>(window_.front() + 60s - now) + milliseconds{1};
        }
        if (wait.count() > 0) clock_.sleep(wait);
    }
}

std::vector<steady_clock::time_point> RateLimiter::issue_times() const {
    std::lock_guard lock(mutex_);
    return {issued_.begin(), issued_.end()};
}

}  // namespace fincot::gateway
