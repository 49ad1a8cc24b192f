#pragma once

#include <stdexcept>
#include <string>

namespace lle {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad arguments, broken preconditions, malformed input files.
struct ConfigError : Error {
    using Error::Error;
};

// Solver failures, rank defects, non-finite data discovered mid-computation.
struct NumericalError : Error {
    using Error::Error;
};

}  // namespace lle
