#pragma once

#include <stdexcept>
#include <string>

namespace dualperron {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value became non-finite (NaN or infinity), or one was supplied as input.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Dual division is undefined for the given operands.
class DivisionError : public Error {
public:
    using Error::Error;
};

/// Operand dimensions do not agree.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A linear system (or a standard part) is numerically singular.
class SingularError : public Error {
public:
    using Error::Error;
};

/// The matrix is not primitive, but the operation requires it.
class NotPrimitiveError : public Error {
public:
    using Error::Error;
};

/// The matrix is not irreducible, but the operation requires it.
class NotIrreducibleError : public Error {
public:
    using Error::Error;
};

/// An iterative kernel failed to converge within its iteration cap.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// An argument violates a documented precondition.
class InvalidInputError : public Error {
public:
    using Error::Error;
};

/// A document could not be parsed or written.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace dualperron
