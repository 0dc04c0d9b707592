#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace fincot {

// Error codes shared across the pipeline. Names mirror the failure
// surfaces of the operations that raise them.
enum class Errc {
    exhausted,
    malformed,
    timeout,
    unreadable_source,
    unknown_format,
    empty_input,
    all_failed,
    no_correct_candidate,
    verification_unavailable,
    malformed_annotation,
    invalid_sample,
    parse_error,
    io_error,
    insufficient,
    judge_unavailable,
    config_invalid,
    stage_failed,
    template_error,
    precondition_violated,
};

std::string_view errc_name(Errc code);

struct Error {
    Errc code;
    std::string message;

    std::string to_string() const {
        std::string out(errc_name(code));
        if (!message.empty()) {
            out += ": ";
            out += message;
        }
        return out;
    }
};

inline Error make_error(Errc code, std::string message) {
    return Error{code, std::move(message)};
}

// Minimal expected-like carrier: either a value or an Error.
template <typename T>
class Result {
public:
    Result(T value) : state_(std::move(value)) {}
    Result(Error error) : state_(std::move(error)) {}

    bool ok() const { return std::holds_alternative<T>(state_); }
    explicit operator bool() const { return ok(); }

    const T& value() const& { return std::get<T>(state_); }
    T& value() & { return std::get<T>(state_); }
    T&& take() && { return std::get<T>(std::move(state_)); }

    const T& operator*() const& { return value(); }
    const T* operator->() const { return &value(); }

    const Error& error() const { return std::get<Error>(state_); }
    Errc code() const { return error().code; }

private:
    std::variant<T, Error> state_;
};

template <>
class Result<void> {
public:
    Result() = default;
    Result(Error error) : error_(std::move(error)), failed_(true) {}

    bool ok() const { return !failed_; }
    explicit operator bool() const { return ok(); }

    const Error& error() const { return error_; }
    Errc code() const { return error_.code; }

private:
    Error error_{};
    bool failed_ = false;
};

}  // namespace fincot
