#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dpell {

/// Malformed input: wrong vector length, bad JSON, bad key syntax.
struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally valid input outside an operation's domain
/// (unsupported fibration type, class outside the required cone, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Text parse failure carrying a 1-based character position.
struct ParseError : InvalidInput {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : InvalidInput(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

} // namespace dpell
