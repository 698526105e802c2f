#include "fsdem/core/error.hpp"

namespace fsdem {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_input: return "invalid-input";
        case ErrorCode::invalid_range: return "invalid-range";
        case ErrorCode::degenerate_selection: return "degenerate-selection";
        case ErrorCode::undefined_index: return "undefined-index";
        case ErrorCode::format: return "format";
        case ErrorCode::ingestion: return "ingestion";
        case ErrorCode::io: return "io";
    }
    return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

bool Error::is_data_error() const noexcept {
    return code_ == ErrorCode::format || code_ == ErrorCode::ingestion || code_ == ErrorCode::io;
}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace fsdem
