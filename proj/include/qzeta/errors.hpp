#pragma once

#include <stdexcept>
#include <string>

namespace qzeta {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (wrong shape, unbounded poset, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A rational function has a pole where a finite value was requested.
class PoleError : public Error {
public:
    PoleError(std::string where, int order)
        : Error(where + ": pole of order " + std::to_string(order) + " at q=0"), order_(order) {}

    int order() const noexcept { return order_; }

private:
    int order_;
};

/// Polynomial is not in the ring of polynomials with integer Laurent values at q-integers.
class NotInAq : public Error {
public:
    using Error::Error;
};

class CycleError : public Error {
public:
    using Error::Error;
};

class DuplicateLabel : public Error {
public:
    using Error::Error;
};

class NotGraded : public Error {
public:
    using Error::Error;
};

class InvalidHeight : public Error {
public:
    using Error::Error;
};

/// An identity that holds mathematically failed to hold; always a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace qzeta
