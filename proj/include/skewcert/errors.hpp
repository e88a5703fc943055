#pragma once

#include <stdexcept>
#include <string>

namespace skewcert {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZeroError : Error {
    DivisionByZeroError() : Error("division by zero") {}
    explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

// Raised when an operation would produce a value with no trusted coefficient,
// or when a query cannot be answered at the current working precision.
struct PrecisionExhaustedError : Error {
    using Error::Error;
};

struct ShapeMismatchError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// The instance parameters fail one of the required commutation conditions;
// this disqualifies the instance, it does not indicate a bug.
struct ConditionViolationError : Error {
    using Error::Error;
};

struct NonCommutingPointError : Error {
    using Error::Error;
};

struct FieldNotFiniteError : Error {
    using Error::Error;
};

struct InvalidArgumentError : Error {
    using Error::Error;
};

struct InternalError : Error {
    using Error::Error;
};

}  // namespace skewcert
