#include "fincot/gateway/gateway.hpp"

#include <cmath>
#include <fstream>

namespace fincot::gateway {

using namespace std::chrono;

std::string_view to_string(LengthDirective d) {
    switch (d) {
        case LengthDirective::Long: return "long";
        case LengthDirective::Medium: return "medium";
        case LengthDirective::Short: return "short";
    }
    return "long";
}

Result<LengthDirective> length_directive_from_string(std::string_view s) {
    if (s == "long") return LengthDirective::Long;
    if (s == "medium") return LengthDirective::Medium;
    if (s == "short") return LengthDirective::Short;
    return make_error(Errc::parse_error, "unknown length directive '" + std::string(s) + "'");
}

Result<ParsedTrace> parse_trace(std::string_view raw, std::string_view open, std::string_view close) {
    if (raw.empty()) {
        return make_error(Errc::malformed, "empty response");
    }
    std::size_t begin = raw.find(open);
    if (begin == std::string_view::npos) {
        return ParsedTrace{"", std::string(raw)};
    }
    std::size_t interior = begin + open.size();
    std::size_t end = raw.find(close, interior);
    if (end == std::string_view::npos) {
        return make_error(Errc::malformed, "opening reasoning delimiter without closing delimiter");
    }
    ParsedTrace out;
    out.reasoning_text = std::string(raw.substr(interior, end - interior));
    out.answer_text = std::string(raw.substr(0, begin)) + std::string(raw.substr(end + close.size()));
    // Surrounding newline padding belongs to the wire format, not the text.
    auto trim = [](std::string& s) {
        std::size_t b = s.find_first_not_of("\r\n");
        std::size_t e = s.find_last_not_of("\r\n");
        s = (b == std::string::npos) ? "" : s.substr(b, e - b + 1);
    };
    trim(out.reasoning_text);
    trim(out.answer_text);
    return out;
}

std::string apply_length_directive(std::string_view user_prompt, LengthDirective directive,
                                   const std::vector<std::string>& exemplars, std::size_t k) {
    switch (directive) {
        case LengthDirective::Long:
            return std::string(user_prompt);
        case LengthDirective::Medium:
            return std::string(user_prompt) + "\nBe concise";
        case LengthDirective::Short: {
            std::string out;
            std::size_t n = std::min(k, exemplars.size());
            for (std::size_t i = 0; i < n; ++i) {
                out += exemplars[i];
                out += "\n\n";
            }
            out += user_prompt;
            return out;
        }
    }
    return std::string(user_prompt);
}

Result<std::vector<std::string>> load_exemplar_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        return make_error(Errc::io_error, "cannot open exemplar file " + path);
    }
    std::vector<std::string> exemplars;
    std::string current;
    std::string line;
    auto flush = [&] {
        while (!current.empty() && (current.back() == '\n' || current.back() == '\r')) current.pop_back();
        if (!current.empty()) exemplars.push_back(current);
        current.clear();
    };
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line == "===") {
            flush();
        } else {
            current += line;
            current += '\n';
        }
    }
    flush();
    return exemplars;
}

Gateway::Gateway(std::shared_ptr<TransportBackend> transport, BackendConfig config,
                 GatewayOptions options, Clock clock)
    : transport_(std::move(transport)),
      config_(std::move(config)),
      options_(std::move(options)),
      clock_(clock),
      limiter_(config_.requests_per_minute, clock),
      inflight_(config_.max_inflight),
      rng_(options_.jitter_seed) {}

std::chrono::milliseconds Gateway::backoff_delay(int attempt) {
    // Exponential backoff with full jitter; attempt is 1-based and the
    // delay precedes attempt `attempt`.
    double cap = config_.retry.backoff_base_ms *
                 std::pow(config_.retry.backoff_multiplier, attempt - 2);
    std::lock_guard lock(rng_mutex_);
    std::uniform_real_distribution<double> dist(0.0, cap);
    return milliseconds{static_cast<int64_t>(dist(rng_))};
}

Result<ModelResponse> Gateway::complete(const ModelRequest& request) {
    if (request.role_prompt.empty() || request.user_prompt.empty()) {
        return make_error(Errc::precondition_violated, "prompts must be non-empty");
    }
    if (request.sampling.temperature < 0.0 || request.sampling.nucleus_mass <= 0.0 ||
        request.sampling.nucleus_mass > 1.0 || request.sampling.max_output_units <= 0) {
        return make_error(Errc::precondition_violated, "sampling parameters out of range");
    }

    RenderedPrompt prompt;
    prompt.system = request.role_prompt;
    prompt.user = apply_length_directive(request.user_prompt, request.length_directive,
                                         options_.short_exemplars, options_.exemplar_count);
    prompt.sampling = request.sampling;

    Error last = make_error(Errc::exhausted, "no attempts made");
    bool all_timeouts = true;
    for (int attempt = 1; attempt <= config_.retry.max_attempts; ++attempt) {
        if (attempt > 1) {
            auto delay = backoff_delay(attempt);
            if (delay.count() > 0) clock_.sleep(delay);
        }
        limiter_.acquire();
        inflight_.acquire();
        Result<std::string> raw = transport_->send(prompt);
        inflight_.release();
        if (raw.ok()) {
            auto parsed = parse_trace(raw.value(), config_.think_open, config_.think_close);
            if (parsed.ok()) {
                if (parsed.value().answer_text.empty()) {
                    last = make_error(Errc::malformed, "response has no answer text");
                    all_timeouts = false;
                    continue;
                }
                ModelResponse response;
                response.reasoning_text = parsed.value().reasoning_text;
                response.answer_text = parsed.value().answer_text;
                response.raw = std::move(raw).take();
                return response;
            }
            last = parsed.error();
            all_timeouts = false;
            continue;
        }
        last = raw.error();
        if (last.code != Errc::timeout) all_timeouts = false;
    }

    std::string detail = "after " + std::to_string(config_.retry.max_attempts) +
                         " attempt(s); last failure: " + last.to_string();
    if (all_timeouts) {
        return make_error(Errc::timeout, detail);
    }
    if (last.code == Errc::malformed) {
        return make_error(Errc::malformed, detail);
    }
    return make_error(Errc::exhausted, detail);
}

}  // namespace fincot::gateway
