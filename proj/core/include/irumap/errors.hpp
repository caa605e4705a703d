#pragma once

#include <stdexcept>
#include <string>

namespace irumap {

// Base of everything thrown intentionally by this library. The CLI maps the
// branches below onto process exit codes: validation/config -> 1, I/O -> 2,
// degenerate computation -> 3.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad values, broken preconditions, impossible requests.
struct ValidationError : Error {
    using Error::Error;
};

// Contradictory or unusable configuration (flag pairings, metadata mismatch).
struct ConfigError : ValidationError {
    using ValidationError::ValidationError;
};

// A lookup left the supported domain (e.g. film temperature off the air table).
struct RangeError : ValidationError {
    using ValidationError::ValidationError;
};

// A synthetic scene cannot be constructed from the requested spec.
struct GenerationError : ValidationError {
    using ValidationError::ValidationError;
};

// Filesystem trouble: missing, unreadable, unwritable.
struct IoError : Error {
    using Error::Error;
};

// Structurally broken file contents.
struct ParseError : IoError {
    using IoError::IoError;
};

// A computation produced nothing usable (e.g. every pixel masked).
struct DegenerateError : Error {
    using Error::Error;
};

}  // namespace irumap
