#include "fincot/gateway/scripted_backend.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <thread>

namespace fincot::gateway {

void ScriptedBackend::add_rule(Rule rule) {
    std::lock_guard lock(mutex_);
    rules_.push_back(std::move(rule));
}

void ScriptedBackend::add_response(std::string name, std::vector<std::string> match_all,
                                   std::string text) {
    Rule rule;
    rule.name = std::move(name);
    rule.match_all = std::move(match_all);
    rule.steps.push_back(Step::respond(std::move(text)));
    add_rule(std::move(rule));
}

void ScriptedBackend::add_flaky(std::string name, std::vector<std::string> match_all, Errc code,
                                int times, std::string text) {
    Rule rule;
    rule.name = std::move(name);
    rule.match_all = std::move(match_all);
    for (int i = 0; i < times; ++i) rule.steps.push_back(Step::failure(code));
    if (!text.empty()) rule.steps.push_back(Step::respond(std::move(text)));
    add_rule(std::move(rule));
}

void ScriptedBackend::set_time_source(std::function<std::chrono::steady_clock::time_point()> now) {
    std::lock_guard lock(mutex_);
    now_ = std::move(now);
}

namespace {

Result<Errc> parse_fail_kind(std::string_view kind) {
    if (kind == "TIMEOUT") return Errc::timeout;
    if (kind == "IO") return Errc::io_error;
    if (kind == "MALFORMED") return Errc::malformed;
    return make_error(Errc::parse_error, "unknown fail kind '" + std::string(kind) + "'");
}

}  // namespace

Result<std::shared_ptr<ScriptedBackend>> ScriptedBackend::load_directory(
    const std::filesystem::path& dir) {
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec)) {
        return make_error(Errc::io_error, "fixture directory not found: " + dir.string());
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    auto backend = std::make_shared<ScriptedBackend>();
    for (const auto& file : files) {
        std::ifstream in(file, std::ios::binary);
        if (!in) {
            return make_error(Errc::io_error, "cannot open fixture " + file.string());
        }
        Rule rule;
        rule.name = file.filename().string();
        std::string line;
        bool in_body = false;
        std::string body;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (in_body) {
                body += line;
                body += '\n';
                continue;
            }
            if (line == "---") {
                in_body = true;
            } else if (line.rfind("match: ", 0) == 0) {
                rule.match_all.push_back(line.substr(7));
            } else if (line.rfind("fail: ", 0) == 0) {
                auto kind = parse_fail_kind(line.substr(6));
                if (!kind.ok()) {
                    return make_error(Errc::parse_error, file.string() + ": " + kind.error().message);
                }
                rule.steps.push_back(Step::failure(kind.value()));
            } else if (!line.empty()) {
                return make_error(Errc::parse_error,
                                  file.string() + ": unexpected header line '" + line + "'");
            }
        }
        if (in_body) {
            if (!body.empty() && body.back() == '\n') body.pop_back();
            rule.steps.push_back(Step::respond(body));
        }
        if (rule.steps.empty()) {
            return make_error(Errc::parse_error, file.string() + ": fixture has no steps");
        }
        backend->add_rule(std::move(rule));
    }
    return backend;
}

Result<std::string> ScriptedBackend::send(const RenderedPrompt& prompt) {
    int level = concurrent_.fetch_add(1) + 1;
    int seen = max_concurrent_.load();
    while (level > seen && !max_concurrent_.compare_exchange_weak(seen, level)) {
    }
    calls_.fetch_add(1);
    if (send_delay_.count() > 0) std::this_thread::sleep_for(send_delay_);

    std::string combined = prompt.combined();
    Step step;
    bool matched = false;
    {
        std::lock_guard lock(mutex_);
        prompts_.push_back(combined);
        send_times_.push_back(now_ ? now_() : std::chrono::steady_clock::now());
        for (auto& rule : rules_) {
            bool all = std::all_of(rule.match_all.begin(), rule.match_all.end(),
                                   [&](const std::string& needle) {
                                       return combined.find(needle) != std::string::npos;
                                   });
            if (!all) continue;
            std::size_t index = std::min(rule.consumed, rule.steps.size() - 1);
            step = rule.steps[index];
            ++rule.consumed;
            ++rule.hits;
            matched = true;
            break;
        }
    }
    concurrent_.fetch_sub(1);

    if (!matched) {
        return make_error(Errc::io_error, "no fixture matches prompt");
    }
    if (step.fail) {
        return make_error(step.fail_code, "scripted failure");
    }
    return step.text;
}

std::size_t ScriptedBackend::rule_hits(std::string_view name) const {
    std::lock_guard lock(mutex_);
    for (const auto& rule : rules_) {
        if (rule.name == name) return rule.hits;
    }
    return 0;
}

std::vector<std::string> ScriptedBackend::prompts() const {
    std::lock_guard lock(mutex_);
    return prompts_;
}

std::vector<std::chrono::steady_clock::time_point> ScriptedBackend::send_times() const {
    std::lock_guard lock(mutex_);
    return send_times_;
}

}  // namespace fincot::gateway
