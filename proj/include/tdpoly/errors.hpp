#pragma once

#include <stdexcept>
#include <string>

namespace tdpoly {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text (element syntax, file records, CLI words).
struct ParseError : Error {
    using Error::Error;
};

/// Structurally valid input that violates a mathematical precondition
/// (field mismatch, distinctness, characteristic constraints, ...).
struct DomainError : Error {
    using Error::Error;
};

}  // namespace tdpoly
