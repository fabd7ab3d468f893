#pragma once

#include <stdexcept>
#include <string>

namespace wbinom {

// Base class for every domain error raised by the engine. Input/usage
// problems (bad flags, malformed words) use std::invalid_argument instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A substitution did not cover an indeterminate occurring in the polynomial.
class MissingAssignment : public Error {
public:
    explicit MissingAssignment(const std::string& which)
        : Error("missing assignment for indeterminate " + which) {}
};

// A denominator theta factor vanished (|theta| below the degeneracy threshold).
class EllipticDegenerate : public Error {
public:
    using Error::Error;
};

// A parameter combination makes a closed form undefined (vanishing
// denominator outside the elliptic kernel, zero base raised to a negative
// power, and similar).
class DegenerateParameter : public Error {
public:
    using Error::Error;
};

// The terminating-series balancing condition a^2 q^(n+1) = bcde is violated.
class BalancingViolation : public Error {
public:
    using Error::Error;
};

// theta() was called with argument zero.
class ZeroArgument : public Error {
public:
    ZeroArgument() : Error("theta argument must be nonzero") {}
};

// A symbolic-only operation was requested for a numeric weight family, or
// vice versa.
class DomainMismatch : public Error {
public:
    using Error::Error;
};

} // namespace wbinom
