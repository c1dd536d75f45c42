#pragma once

#include <stdexcept>
#include <string>

namespace reisner {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// A facet list or generator list was empty where content is required.
class EmptyInputError : public Error {
public:
    using Error::Error;
};

/// Strict vertex handling: the declared vertex range has ids missing from
/// every facet.
class IsolatedVertexError : public Error {
public:
    using Error::Error;
};

/// A face argument is not a face of the complex.
class NotAFaceError : public Error {
public:
    using Error::Error;
};

/// An operation defined only for pure complexes received a non-pure one.
class NotPureError : public Error {
public:
    using Error::Error;
};

/// An argument is outside the documented domain of an operation.
class ParameterError : public Error {
public:
    using Error::Error;
};

/// An instance exceeds a hard size cap (vertex count, grid size, ...).
class TooLargeError : public Error {
public:
    using Error::Error;
};

/// The requested quantity needs a complete Betti table but the table was
/// computed with a degree cap.
class PartialTableError : public Error {
public:
    using Error::Error;
};

/// Generators include a unit (the zero exponent vector).
class UnitIdealError : public Error {
public:
    using Error::Error;
};

/// A numeric sequence fails the Macaulay growth test; `degree` is the first
/// degree where the lex-segment closure argument breaks down.
class NotOSequenceError : public Error {
public:
    NotOSequenceError(const std::string& what_arg, int degree)
        : Error(what_arg), degree(degree) {}
    int degree;
};

/// A monomial ideal is not stable under the exchange move x_j * u / x_max(u).
class NotStableError : public Error {
public:
    using Error::Error;
};

/// Malformed input document (JSON syntax or schema violation).
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace reisner
