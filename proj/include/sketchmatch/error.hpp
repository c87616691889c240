#pragma once

#include <stdexcept>
#include <string>

namespace sketchmatch {

// Error categories map to CLI exit codes: usage 1, data 2, numeric 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad arguments or configuration.
struct UsageError : Error {
    using Error::Error;
};

// Unreadable, malformed, or inconsistent input data.
struct DataError : Error {
    using Error::Error;
};

// Numerical failure: no convergence, degenerate spectrum, etc.
struct NumericError : Error {
    using Error::Error;
};

} // namespace sketchmatch
