#pragma once

#include <stdexcept>
#include <string>

namespace spk {

/// Grammar file or grammar-invariant violations. CLI exit code 2.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A requested language slice contains no strings. CLI exit code 3.
struct EmptyLanguageError : std::runtime_error {
    explicit EmptyLanguageError(const std::string& msg) : std::runtime_error(msg) {}
};

/// DFA state space would exceed the configured cap. CLI exit code 2.
struct StateCapError : std::runtime_error {
    explicit StateCapError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Filesystem failures. CLI exit code 4.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace spk
