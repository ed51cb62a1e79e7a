#pragma once

#include <stdexcept>
#include <string>

namespace collet {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid configuration or geometry (CLI exit code 2).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Numerical failure during a computation (CLI exit code 3).
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain of a formula.
class DomainError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// Adaptor advanced past the apex of the jaw.
class NonPhysicalState : public DomainError {
public:
    using DomainError::DomainError;
};

/// The jaw cross-section has zero or negative central angle.
class SectionVanished : public DomainError {
public:
    using DomainError::DomainError;
};

/// Contact force ratio diverges (contact at the apex).
class UnboundedRatio : public DomainError {
public:
    using DomainError::DomainError;
};

/// The arc-length equation has no root in its bracket.
class NoSolution : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// A linear system could not be solved.
class SingularSystem : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace collet
