#pragma once

#include <stdexcept>
#include <string>

namespace nullcurve {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Argument outside the domain of a generator, curve, or table.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A fractional-linear map was evaluated at its pole.
class PoleError : public Error {
public:
    using Error::Error;
};

/// A constructor or operation received parameters violating its contract.
class InvalidParam : public Error {
public:
    using Error::Error;
};

/// No valid interval exists for the requested generator.
class EmptyDomain : public InvalidParam {
public:
    using InvalidParam::InvalidParam;
};

/// Adaptive quadrature hit its subdivision budget before meeting the tolerance.
class QuadratureFailure : public Error {
public:
    using Error::Error;
};

/// A finite-difference stencil does not fit the available samples.
class InsufficientStencil : public Error {
public:
    using Error::Error;
};

/// Argument outside the range where the special function stays representable.
class OverflowRange : public Error {
public:
    using Error::Error;
};

} // namespace nullcurve
