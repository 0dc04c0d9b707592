#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace fincot::util {

// Applies fn to every item on up to `workers` threads and returns the
// results in input order, so concurrency never changes outcomes.
template <typename In, typename Fn>
auto parallel_map(const std::vector<In>& items, std::size_t workers, Fn fn)
    -> std::vector<std::invoke_result_t<Fn, const In&>> {
    using Out = std::invoke_result_t<Fn, const In&>;
    std::vector<Out> results(items.size());
    if (items.empty()) return results;
    workers = std::min(workers == 0 ? std::size_t{1} : workers, items.size());
    if (workers == 1) {
        for (std::size_t i = 0; i < items.size(); ++i) results[i] = fn(items[i]);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        threads.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= items.size()) break;
                try {
                    results[i] = fn(items[i]);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return results;
}

}  // namespace fincot::util
