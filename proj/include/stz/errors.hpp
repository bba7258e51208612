#pragma once

#include <stdexcept>
#include <string>

namespace stz {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text or documents. CLI maps this to exit code 2.
struct ParseError : Error {
    using Error::Error;
};

// Mathematically impossible or unavailable request. CLI maps this to exit code 3.
struct MathError : Error {
    using Error::Error;
};

struct RepeatedRoots : MathError {
    using MathError::MathError;
};

struct ShapeMismatch : MathError {
    using MathError::MathError;
};

struct NegativePart : MathError {
    using MathError::MathError;
};

struct SeriesTruncation : MathError {
    using MathError::MathError;
};

struct SeriesMode : MathError {
    using MathError::MathError;
};

struct SingularMatrix : MathError {
    using MathError::MathError;
};

struct DegenerateDenominator : MathError {
    using MathError::MathError;
};

struct MethodUnavailable : MathError {
    using MathError::MathError;
};

struct InvalidIndex : MathError {
    using MathError::MathError;
};

struct RequiresPositiveP : MathError {
    using MathError::MathError;
};

struct NonConvergence : MathError {
    using MathError::MathError;
};

// Cost guards of the brute-force reference implementations.
struct OrderTooLarge : MathError {
    using MathError::MathError;
};

struct SizeTooLarge : MathError {
    using MathError::MathError;
};

}  // namespace stz
