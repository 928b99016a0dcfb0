#pragma once

#include <stdexcept>
#include <string>

namespace latcomp {

// Base class of all failures raised by the library.  The CLI maps these to
// process exit codes: ParseError -> 2, GuardError -> 3, anything else -> 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text / command line.
struct ParseError : Error {
    using Error::Error;
};

// A resource guard tripped (enumeration too large, prime search exhausted).
struct GuardError : Error {
    using Error::Error;
};

// Arguments violate a documented precondition.
struct DomainError : Error {
    using Error::Error;
};

// A basis turned out to be rank deficient.
struct RankError : DomainError {
    using DomainError::DomainError;
};

} // namespace latcomp
