#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "fincot/error.hpp"
#include "fincot/gateway/gateway.hpp"

namespace fincot::gateway {

// A prompt file holds the system prompt, a separator line "---", then
// the user prompt. Placeholders look like {question}; names are
// lowercase identifiers. A placeholder with no bound value is an error.
class PromptTemplate {
public:
    static Result<PromptTemplate> parse(std::string_view contents, std::string origin = "<inline>");
    static Result<PromptTemplate> load(const std::filesystem::path& path);

    Result<ModelRequest> render(const std::map<std::string, std::string>& values,
                                const SamplingParams& sampling = {},
                                LengthDirective directive = LengthDirective::Long) const;

    const std::string& role_text() const { return role_; }
    const std::string& user_text() const { return user_; }

private:
    std::string role_;
    std::string user_;
    std::string origin_;
};

// Named templates loaded from a directory of .txt files (name =
// filename stem).
class TemplateSet {
public:
    static Result<TemplateSet> load_directory(const std::filesystem::path& dir);

    void add(std::string name, PromptTemplate tmpl);
    bool has(std::string_view name) const;
    Result<ModelRequest> render(std::string_view name,
                                const std::map<std::string, std::string>& values,
                                const SamplingParams& sampling = {},
                                LengthDirective directive = LengthDirective::Long) const;

    std::vector<std::string> names() const;

private:
    std::map<std::string, PromptTemplate, std::less<>> templates_;
};

}  // namespace fincot::gateway
