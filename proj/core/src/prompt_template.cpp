#include "fincot/gateway/prompt_template.hpp"

#include <cctype>

#include "fincot/util/jsonl.hpp"

namespace fincot::gateway {
namespace {

bool is_name_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

Result<std::string> substitute(std::string_view text,
                               const std::map<std::string, std::string>& values,
                               const std::string& origin) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c != '{') {
            out += c;
            ++i;
            continue;
        }
        std::size_t j = i + 1;
        while (j < text.size() && is_name_char(text[j])) ++j;
        if (j > i + 1 && j < text.size() && text[j] == '}' &&
            text[i + 1] >= 'a' && text[i + 1] <= 'z') {
            std::string name(text.substr(i + 1, j - i - 1));
            auto it = values.find(name);
            if (it == values.end()) {
                return make_error(Errc::template_error,
                                  origin + ": no value bound for placeholder {" + name + "}");
            }
            out += it->second;
            i = j + 1;
        } else {
            // Not a placeholder (JSON braces, etc.); copy through.
            out += c;
            ++i;
        }
    }
    return out;
}

}  // namespace

Result<PromptTemplate> PromptTemplate::parse(std::string_view contents, std::string origin) {
    PromptTemplate tmpl;
    tmpl.origin_ = std::move(origin);
    std::size_t pos = contents.find("\n---\n");
    if (pos == std::string_view::npos) {
        return make_error(Errc::template_error,
                          tmpl.origin_ + ": missing '---' separator between role and user prompt");
    }
    tmpl.role_ = std::string(contents.substr(0, pos));
    tmpl.user_ = std::string(contents.substr(pos + 5));
    while (!tmpl.user_.empty() && tmpl.user_.back() == '\n') tmpl.user_.pop_back();
    if (tmpl.role_.empty() || tmpl.user_.empty()) {
        return make_error(Errc::template_error, tmpl.origin_ + ": role and user prompt must be non-empty");
    }
    return tmpl;
}

Result<PromptTemplate> PromptTemplate::load(const std::filesystem::path& path) {
    auto contents = util::read_file(path);
    if (!contents.ok()) {
        return make_error(Errc::template_error, "cannot read template " + path.string());
    }
    return parse(contents.value(), path.filename().string());
}

Result<ModelRequest> PromptTemplate::render(const std::map<std::string, std::string>& values,
                                            const SamplingParams& sampling,
                                            LengthDirective directive) const {
    auto role = substitute(role_, values, origin_);
    if (!role.ok()) return role.error();
    auto user = substitute(user_, values, origin_);
    if (!user.ok()) return user.error();
    ModelRequest request;
    request.role_prompt = std::move(role).take();
    request.user_prompt = std::move(user).take();
    request.sampling = sampling;
    request.length_directive = directive;
    return request;
}

Result<TemplateSet> TemplateSet::load_directory(const std::filesystem::path& dir) {
    std::error_code ec;
    if (!std::filesystem::is_directory(dir, ec)) {
        return make_error(Errc::template_error, "template directory not found: " + dir.string());
    }
    TemplateSet set;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
        auto tmpl = PromptTemplate::load(entry.path());
        if (!tmpl.ok()) return tmpl.error();
        set.templates_.emplace(entry.path().stem().string(), std::move(tmpl).take());
    }
    return set;
}

void TemplateSet::add(std::string name, PromptTemplate tmpl) {
    templates_.insert_or_assign(std::move(name), std::move(tmpl));
}

bool TemplateSet::has(std::string_view name) const {
    return templates_.find(name) != templates_.end();
}

Result<ModelRequest> TemplateSet::render(std::string_view name,
                                         const std::map<std::string, std::string>& values,
                                         const SamplingParams& sampling,
                                         LengthDirective directive) const {
    auto it = templates_.find(name);
    if (it == templates_.end()) {
        return make_error(Errc::template_error, "no template named '" + std::string(name) + "'");
    }
    return it->second.render(values, sampling, directive);
}

std::vector<std::string> TemplateSet::names() const {
    std::vector<std::string> out;
    out.reserve(templates_.size());
    for (const auto& [name, _] : templates_) out.push_back(name);
    return out;
}

}  // namespace fincot::gateway
