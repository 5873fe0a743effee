#pragma once

#include <stdexcept>
#include <string>

namespace apts {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// core-model / input validation
struct EmptyInput : Error { using Error::Error; };
struct RaggedChannels : Error { using Error::Error; };
struct NonFinite : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

// trade dynamics
struct NonPositivePrice : Error { using Error::Error; };

// signal / breakpoint plumbing
struct LengthMismatch : Error { using Error::Error; };
struct WeightMismatch : Error { using Error::Error; };

// baselines
struct TooShort : Error { using Error::Error; };
struct NotPositiveDefinite : Error { using Error::Error; };

// file ingestion
struct ParseError : Error {
    ParseError(const std::string& what, long line) : Error(what + " (line " + std::to_string(line) + ")"), line_number(line) {}
    long line_number;
};
struct FormatMismatch : Error { using Error::Error; };

} // namespace apts
