#pragma once

#include <stdexcept>
#include <string>

namespace inclab {

/// Base class of all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or unreadable input (CLI exit code 2).
struct InputError : Error {
    using Error::Error;
};
struct IoError : InputError {
    using InputError::InputError;
};
struct ParseError : InputError {
    int line_no;
    ParseError(int line, const std::string& msg)
        : InputError("parse error at line " + std::to_string(line) + ": " + msg), line_no(line) {}
};
struct NonPrimeField : InputError {
    using InputError::InputError;
};

/// Violated operation precondition (CLI exit code 3).
struct PreconditionError : Error {
    using Error::Error;
};
struct FieldMismatch : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct ZeroInverse : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct EqualPoints : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct EqualLines : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct EqualPlanes : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct NoLambdaIntersection : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct NoPiIntersection : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct PointOnYZPlane : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct PlaneDegenerateForPsi : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct SizeOrderViolation : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct ParameterExceedsField : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct FieldTooSmallForDegree : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct ConstructionRetryExceeded : PreconditionError {
    using PreconditionError::PreconditionError;
};

/// Generic-position resampling exhausted its retry budget (CLI exit code 4).
struct GenericPositionFailure : Error {
    using Error::Error;
};

/// A should-never-fail consistency check tripped (CLI exit code 5).
struct InternalCheckFailure : Error {
    using Error::Error;
};

}  // namespace inclab
