#pragma once

#include <stdexcept>
#include <string>

namespace co31 {

enum class ErrorCode {
    invalid_embedding,  // rotation system or outer face is malformed
    precondition,       // well-formed input outside an operation's domain
    structural,         // an update would break the disk structure
    format,             // unreadable or ill-typed file contents
    internal,           // an invariant the algorithms rely on did not hold
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Outcome of one of the independent verifiers. `failure` names the first
/// violated condition and is empty on success.
struct Report {
    bool ok = true;
    std::string failure;

    static Report pass() { return {}; }
    static Report fail(std::string why) { return {false, std::move(why)}; }

    explicit operator bool() const { return ok; }
};

}  // namespace co31
