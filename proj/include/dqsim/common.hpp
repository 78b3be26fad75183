#pragma once

#include <stdexcept>

namespace dqsim {

// Error taxonomy; the CLI maps each class to a distinct exit code.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text: circuit files, truth-table files, option values.
struct ParseError : Error {
    using Error::Error;
};

// Syntactically fine input that violates an operation's domain.
struct DomainError : Error {
    using Error::Error;
};

// Work that would exceed a hard resource limit.
struct LimitError : Error {
    using Error::Error;
};

}  // namespace dqsim
