#include "fincot/gateway/http_backend.hpp"

#include <cstdlib>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#include <nlohmann/json.hpp>

namespace fincot::gateway {

using nlohmann::json;

HttpBackend::HttpBackend(HttpBackendConfig config) : config_(std::move(config)) {
    if (!config_.api_key_env.empty()) {
        if (const char* key = std::getenv(config_.api_key_env.c_str())) {
            api_key_ = key;
        }
    }
}

Result<std::string> HttpBackend::send(const RenderedPrompt& prompt) {
    httplib::Client client(config_.base_url);
    client.set_connection_timeout(0, config_.connect_timeout_ms * 1000);
    client.set_read_timeout(config_.read_timeout_ms / 1000, (config_.read_timeout_ms % 1000) * 1000);

    httplib::Headers headers;
    if (!api_key_.empty()) {
        headers.emplace("Authorization", "Bearer " + api_key_);
    }

    json body;
    body["model"] = config_.model;
    body["messages"] = json::array({
        json{{"role", "system"}, {"content", prompt.system}},
        json{{"role", "user"}, {"content", prompt.user}},
    });
    body["temperature"] = prompt.sampling.temperature;
    body["top_p"] = prompt.sampling.nucleus_mass;
    body["max_tokens"] = prompt.sampling.max_output_units;

    auto res = client.Post(config_.path, headers, body.dump(), "application/json");
    if (!res) {
        auto err = httplib::to_string(res.error());
        bool timed_out = res.error() == httplib::Error::ConnectionTimeout ||
                         res.error() == httplib::Error::Read;
        return make_error(timed_out ? Errc::timeout : Errc::io_error, "http: " + err);
    }
    if (res->status != 200) {
        return make_error(Errc::io_error, "http status " + std::to_string(res->status));
    }

    json parsed = json::parse(res->body, nullptr, false);
    if (parsed.is_discarded()) {
        return make_error(Errc::malformed, "response body is not JSON");
    }
    if (!parsed.contains("choices") || !parsed["choices"].is_array() || parsed["choices"].empty()) {
        return make_error(Errc::malformed, "response has no choices");
    }
    const json& message = parsed["choices"][0].value("message", json::object());
    std::string content = message.value("content", "");
    std::string reasoning = message.value("reasoning_content", "");
    if (!reasoning.empty() && content.find(config_.think_open) == std::string::npos) {
        return config_.think_open + reasoning + config_.think_close + "\n" + content;
    }
    return content;
}

}  // namespace fincot::gateway
