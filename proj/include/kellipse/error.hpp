#pragma once

#include <stdexcept>
#include <string>

namespace kellipse {

// Base for everything thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Precondition violations on caller-supplied data (bad foci string, zero
// polynomial where nonzero required, duplicate abscissae, ...).
struct InvalidArgument : Error {
    using Error::Error;
};

// Input configuration fails a genericity assumption (repeated tangents,
// square-root failure, shared components, count mismatches).
struct NonGenericError : Error {
    using Error::Error;
};

// Two internal routes disagree, or an interpolation consistency check fails.
struct InternalError : Error {
    using Error::Error;
};

// Iterative scheme hit its cap.
struct ConvergenceError : Error {
    using Error::Error;
};

// k exceeds the configured resource limit.
struct ResourceGuardError : Error {
    using Error::Error;
};

}  // namespace kellipse
