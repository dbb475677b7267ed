#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace riordan {

// Base class for everything this library throws on bad input or
// violated preconditions. CLI maps these to exit code 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Order-of-series precondition violated (e.g. composing with an
// order-0 inner series, or dividing by a series of larger order).
struct OrderError : Error {
    using Error::Error;
};

// A series failed its parity contract (even/odd tag vs. actual
// coefficients, or a mixed-parity argument where pure parity is required).
struct ParityError : Error {
    using Error::Error;
};

// Division by a series that is identically zero on its certified prefix.
struct ZeroDivisor : Error {
    using Error::Error;
};

// Requested more coefficients/rows than the certified truncation carries.
struct TruncError : Error {
    using Error::Error;
};

// Matrix shape/stucture violation (non-triangular where triangular is
// required, checkerboard pattern broken, size mismatch).
struct ShapeError : Error {
    using Error::Error;
};

// A triangular solve hit a zero diagonal entry.
struct SingularSystem : Error {
    using Error::Error;
};

// A succession rule produced a label outside the materialized window.
struct WindowOverflow : Error {
    WindowOverflow(const std::string& msg, int offending_label)
        : Error(msg), label(offending_label) {}
    int label;
};

// A TP construction was invoked on a base array that is not totally
// positive at the working truncation.
struct NonTPBase : Error {
    using Error::Error;
};

// Expression parse failure; carries the byte offset and what was expected.
struct SyntaxError : Error {
    SyntaxError(const std::string& msg, std::size_t at, std::string expected_set)
        : Error(msg), offset(at), expected(std::move(expected_set)) {}
    std::size_t offset;
    std::string expected;
};

}  // namespace riordan
