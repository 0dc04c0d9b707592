#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "fincot/error.hpp"
#include "fincot/gateway/gateway.hpp"

namespace fincot::gateway {

// Deterministic offline transport: ordered rules map prompts to scripted
// responses or failures. Instrumented so tests can audit concurrency,
// call counts and the prompts actually sent.
class ScriptedBackend : public TransportBackend {
public:
    struct Step {
        bool fail = false;
        Errc fail_code = Errc::io_error;
        std::string text;

        static Step respond(std::string text) { return Step{false, Errc::io_error, std::move(text)}; }
        static Step failure(Errc code) { return Step{true, code, {}}; }
    };

    struct Rule {
        std::string name;
        std::vector<std::string> match_all;  // empty = matches everything
        std::vector<Step> steps;             // last step repeats forever
        std::size_t consumed = 0;
        std::size_t hits = 0;
    };

    ScriptedBackend() = default;

    void add_rule(Rule rule);
    // Always respond `text` to prompts containing every needle.
    void add_response(std::string name, std::vector<std::string> match_all, std::string text);
    // Fail `times` times with `code`, then respond `text` (empty text:
    // keep failing forever).
    void add_flaky(std::string name, std::vector<std::string> match_all, Errc code, int times,
                   std::string text);

    // Loads one rule per regular file, in lexicographic filename order.
    // File format: optional "match: <substring>" lines (all must occur
    // in the prompt), optional "fail: TIMEOUT|IO|MALFORMED" lines (one
    // failing attempt each), then a line "---" and the verbatim
    // response body. A file without "---" is a failure-only rule.
    static Result<std::shared_ptr<ScriptedBackend>> load_directory(const std::filesystem::path& dir);

    Result<std::string> send(const RenderedPrompt& prompt) override;
    std::string describe() const override { return "scripted"; }

    // Test instrumentation.
    void set_send_delay(std::chrono::milliseconds delay) { send_delay_ = delay; }
    void set_time_source(std::function<std::chrono::steady_clock::time_point()> now);
    int calls() const { return calls_.load(); }
    int max_concurrent() const { return max_concurrent_.load(); }
    std::size_t rule_hits(std::string_view name) const;
    std::vector<std::string> prompts() const;
    std::vector<std::chrono::steady_clock::time_point> send_times() const;

private:
    mutable std::mutex mutex_;
    std::vector<Rule> rules_;
    std::vector<std::string> prompts_;
    std::vector<std::chrono::steady_clock::time_point> send_times_;
    std::function<std::chrono::steady_clock::time_point()> now_;
    std::chrono::milliseconds send_delay_{0};
    std::atomic<int> calls_{0};
    std::atomic<int> concurrent_{0};
    std::atomic<int> max_concurrent_{0};
};

}  // namespace fincot::gateway
