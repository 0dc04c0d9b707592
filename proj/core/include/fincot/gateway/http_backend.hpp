#pragma once

#include <string>

#include "fincot/error.hpp"
#include "fincot/gateway/gateway.hpp"

namespace fincot::gateway {

struct HttpBackendConfig {
    std::string base_url;                        // e.g. "http://10.0.0.5:8000"
    std::string path = "/v1/chat/completions";   // chat-style completions endpoint
    std::string model;
    std::string api_key_env = "FINCOT_API_KEY";  // env var holding the bearer token
    int connect_timeout_ms = 10'000;
    int read_timeout_ms = 300'000;
    std::string think_open = "<think>";
    std::string think_close = "</think>";
};

// Provider-agnostic chat-completions transport. Reasoning content, when
// the provider reports it separately, is folded back into the raw text
// between the configured delimiters so downstream parsing is uniform.
class HttpBackend : public TransportBackend {
public:
    explicit HttpBackend(HttpBackendConfig config);

    Result<std::string> send(const RenderedPrompt& prompt) override;
    std::string describe() const override { return "http:" + config_.base_url; }

private:
    HttpBackendConfig config_;
    std::string api_key_;
};

}  // namespace fincot::gateway
