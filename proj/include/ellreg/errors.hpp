#pragma once

#include <stdexcept>
#include <string>

namespace ellreg {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct IndexError : Error {
    using Error::Error;
};

struct NumericalFailure : Error {
    using Error::Error;
};

struct NotPositiveDefinite : Error {
    using Error::Error;
};

struct InvalidExample : Error {
    using Error::Error;
};

struct EmptyStore : Error {
    using Error::Error;
};

struct SpecError : Error {
    using Error::Error;
};

struct AlignmentError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace ellreg
