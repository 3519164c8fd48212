#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conley {

/// Machine-readable failure categories shared by the library and the CLI.
enum class ErrorCode {
    dimension,
    domain,
    format,
    undersampled,
    realizability,
    inconsistency,
    degeneracy,
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::dimension: return "dimension";
    case ErrorCode::domain: return "domain";
    case ErrorCode::format: return "format";
    case ErrorCode::undersampled: return "undersampled";
    case ErrorCode::realizability: return "realizability";
    case ErrorCode::inconsistency: return "inconsistency";
    case ErrorCode::degeneracy: return "degeneracy";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace conley
