#pragma once

#include <stdexcept>
#include <string>

namespace biframe {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// A type invariant was violated at construction time.
class InvariantViolationError : public Error {
public:
    using Error::Error;
};

class NonSquareError : public Error {
public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

/// Two indexed families that must share an index set have different lengths.
class IndexMismatchError : public Error {
public:
    using Error::Error;
};

/// Orthonormalization found numerical rank zero.
class AllColumnsNegligibleError : public Error {
public:
    using Error::Error;
};

/// Douglas factorization residual exceeded its bound: range(U) is not
/// contained in range(V) at the requested tolerance.
class RangeNotContainedError : public Error {
public:
    using Error::Error;
};

class NotAFrameError : public Error {
public:
    using Error::Error;
};

class NotBoundedBelowError : public Error {
public:
    using Error::Error;
};

class NonHermitianOperatorError : public Error {
public:
    using Error::Error;
};

class SingularOperatorError : public Error {
public:
    using Error::Error;
};

class SingularControllerError : public Error {
public:
    using Error::Error;
};

class SingularFactorError : public Error {
public:
    using Error::Error;
};

class ZeroGeneratorError : public Error {
public:
    using Error::Error;
};

class InvalidSpecError : public Error {
public:
    using Error::Error;
};

/// Malformed instance document. Subsumes schema-version and
/// schema-validation failures so a single catch covers all load errors.
class ParseError : public Error {
public:
    using Error::Error;
};

class SchemaVersionMismatchError : public ParseError {
public:
    using ParseError::ParseError;
};

class SchemaValidationError : public ParseError {
public:
    using ParseError::ParseError;
};

}  // namespace biframe
