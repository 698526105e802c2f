#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fsdem {

enum class ErrorCode {
    invalid_input,
    invalid_range,
    degenerate_selection,
    undefined_index,
    format,
    ingestion,
    io,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library. The code distinguishes the failure
/// classes callers react to (the CLI maps them to exit codes).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

    bool is_data_error() const noexcept;

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace fsdem
