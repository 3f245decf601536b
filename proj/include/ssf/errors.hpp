#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ssf {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed expression text. `position` is a 0-based byte offset into the input.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, std::size_t position)
        : Error(message + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

/// Identifier that is neither the curve parameter nor a supported function.
class UnknownFunctionError : public Error {
public:
    UnknownFunctionError(const std::string& name, std::size_t position)
        : Error("unknown function or identifier '" + name + "' (at position " +
                std::to_string(position) + ")"),
          name(name), position(position) {}
    std::string name;
    std::size_t position;
};

/// Function called with the wrong number of arguments.
class ArityError : public Error {
public:
    ArityError(const std::string& message, std::size_t position)
        : Error(message + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

/// Evaluation outside the mathematical domain (ln of a non-positive value,
/// division by zero, a point with z <= 0 in the half-space model, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Curve failed arc-length validation. Carries the measured speed.
class NotUnitSpeedError : public Error {
public:
    NotUnitSpeedError(const std::string& message, double measured_speed)
        : Error(message), measured_speed(measured_speed) {}
    double measured_speed;
};

/// Parameter tuple violates a constructor constraint.
class ConstraintError : public Error {
public:
    using Error::Error;
};

/// Invalid function parameters (e.g. hypergeometric c a non-positive integer).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Argument outside the supported region of a special function.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Non-positive integration step.
class StepError : public Error {
public:
    using Error::Error;
};

/// Sample grid contains no points.
class EmptyRangeError : public Error {
public:
    using Error::Error;
};

} // namespace ssf
