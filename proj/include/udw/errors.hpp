#pragma once

#include <stdexcept>
#include <string>

namespace udw {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// bad input: eta <= 0, a outside (0,1), z = 0 for gamma0, ...
struct DomainError : Error {
    using Error::Error;
};
struct NonPositiveInput : DomainError {
    using DomainError::DomainError;
};
struct OverDamped : DomainError {
    using DomainError::DomainError;
};
struct PoleError : DomainError {
    using DomainError::DomainError;
};
struct UndefinedRetardedTime : DomainError {
    using DomainError::DomainError;
};

struct ConvergenceError : Error {
    using Error::Error;
};

struct QuadratureFailure : Error {
    using Error::Error;
};

struct UnknownFigure : Error {
    using Error::Error;
};

}  // namespace udw
