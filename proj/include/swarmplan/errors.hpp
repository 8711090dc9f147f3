#pragma once

#include <stdexcept>
#include <string>

namespace swarmplan {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input document (bad JSON, wrong types).
struct ParseError : Error {
    using Error::Error;
};

// Structurally valid input that violates a domain invariant. The message
// names the offending field.
struct ValidationError : Error {
    using Error::Error;
};

// Invalid configuration of an operation (bad counts, ranges, rates).
struct ConfigError : Error {
    using Error::Error;
};

// Evaluation parameter outside the valid domain.
struct DomainError : Error {
    using Error::Error;
};

// Bad runtime input to a computation (empty set, dimension mismatch).
struct InputError : Error {
    using Error::Error;
};

// Assignment does not cover every task exactly once.
struct AssignmentError : Error {
    using Error::Error;
};

// Exhaustive solver refused an instance that exceeds its enumeration guard.
struct OracleRefusedError : Error {
    using Error::Error;
};

// Mission-level failure; names the UAV and leg involved.
struct MissionError : Error {
    using Error::Error;
};

} // namespace swarmplan
