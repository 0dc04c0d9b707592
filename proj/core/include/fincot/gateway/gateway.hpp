#pragma once

#include <memory>
#include <mutex>
#include <random>
#include <semaphore>
#include <string>
#include <vector>

#include "fincot/error.hpp"
#include "fincot/gateway/clock.hpp"
#include "fincot/gateway/rate_limiter.hpp"

namespace fincot::gateway {

enum class LengthDirective { Long, Medium, Short };

std::string_view to_string(LengthDirective d);
Result<LengthDirective> length_directive_from_string(std::string_view s);

struct SamplingParams {
    double temperature = 0.7;
    double nucleus_mass = 0.95;
    int max_output_units = 4096;
};

struct ModelRequest {
    std::string role_prompt;
    std::string user_prompt;
    SamplingParams sampling;
    LengthDirective length_directive = LengthDirective::Long;
};

struct ModelResponse {
    std::string reasoning_text;  // may be empty
    std::string answer_text;
    std::string raw;
};

struct RetryPolicy {
    int max_attempts = 3;
    int backoff_base_ms = 500;
    double backoff_multiplier = 2.0;
};

struct BackendConfig {
    std::string name = "backend";
    int max_inflight = 4;
    int requests_per_minute = 600;
    RetryPolicy retry;
    std::string think_open = "<think>";
    std::string think_close = "</think>";
};

// What a transport sees after the gateway has applied the length
// directive to the user prompt.
struct RenderedPrompt {
    std::string system;
    std::string user;
    SamplingParams sampling;

    std::string combined() const { return system + "\n" + user; }
};

class TransportBackend {
public:
    virtual ~TransportBackend() = default;
    virtual Result<std::string> send(const RenderedPrompt& prompt) = 0;
    virtual std::string describe() const { return "backend"; }
};

struct ParsedTrace {
    std::string reasoning_text;
    std::string answer_text;
};

// Splits a raw completion into reasoning-block interior and remainder.
// No delimiter: reasoning empty, answer = raw. Opening delimiter with
// no closing one is MALFORMED.
Result<ParsedTrace> parse_trace(std::string_view raw,
                                std::string_view open = "<think>",
                                std::string_view close = "</think>");

// Prompt-level CoT length control: Medium appends "Be concise", Short
// prepends up to k in-context exemplars.
std::string apply_length_directive(std::string_view user_prompt, LengthDirective directive,
                                   const std::vector<std::string>& exemplars, std::size_t k);

// Exemplar file: plain text, exemplars separated by a line containing
// only "===".
Result<std::vector<std::string>> load_exemplar_file(const std::string& path);

struct GatewayOptions {
    std::vector<std::string> short_exemplars;
    std::size_t exemplar_count = 3;
    uint64_t jitter_seed = 0x5eedf1cc;
};

// Uniform, rate-limited, retrying access to one model service. Safe to
// call from many workers; in-flight and rate accounting are
// centralized here.
class Gateway {
public:
    Gateway(std::shared_ptr<TransportBackend> transport, BackendConfig config,
            GatewayOptions options = {}, Clock clock = Clock::system());

    Result<ModelResponse> complete(const ModelRequest& request);

    const BackendConfig& config() const { return config_; }
    const RateLimiter& limiter() const { return limiter_; }

private:
    std::chrono::milliseconds backoff_delay(int attempt);

    std::shared_ptr<TransportBackend> transport_;
    BackendConfig config_;
    GatewayOptions options_;
    Clock clock_;
    RateLimiter limiter_;
    std::counting_semaphore<> inflight_;
    std::mutex rng_mutex_;
    std::mt19937_64 rng_;
};

}  // namespace fincot::gateway
