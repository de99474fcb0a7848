/// @file errors.hpp
/// @brief Exception taxonomy shared by the library and the command-line tool.
///
/// Each exception type maps to a distinct failure class so callers (and the
/// CLI exit-code policy) can react uniformly:
///   - StructuralError:          malformed mathematical input (bad basis key,
///                               wrong vector length, invalid module tag).
///   - PreconditionError:        a documented operation precondition failed
///                               (e.g. a required nonzero parameter is zero).
///   - ModeError:                an operation was requested in an arithmetic
///                               mode that cannot support it.
///   - NumericError:             floating-point computation lost too much
///                               accuracy to certify a result.
///   - InternalConsistencyError: two independent computation routes that must
///                               agree disagreed; indicates a bug, never user
///                               error.
///   - UsageError:               bad command-line arguments or option values.

#pragma once

#include <stdexcept>
#include <string>

namespace cherednik {

/// Malformed mathematical object (index out of range, wrong length, ...).
class StructuralError : public std::runtime_error {
public:
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

/// A documented operation precondition does not hold for the given input.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// Operation requested in an arithmetic mode that cannot perform it.
class ModeError : public std::runtime_error {
public:
    explicit ModeError(const std::string& what) : std::runtime_error(what) {}
};

/// Floating-point computation failed to reach the required accuracy.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Two computation routes that must agree did not; always a library bug.
class InternalConsistencyError : public std::logic_error {
public:
    explicit InternalConsistencyError(const std::string& what) : std::logic_error(what) {}
};

/// Invalid command-line usage (unknown option, malformed value, ...).
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cherednik
