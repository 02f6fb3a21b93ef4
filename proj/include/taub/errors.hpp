#pragma once

#include <stdexcept>
#include <string>

namespace taub {

// Base of every error thrown by the library. The CLI maps these to exit 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (e.g. x <= 1).
class DomainError : public Error {
public:
    using Error::Error;
};

// Value outside an accepted range (checkpoint beyond horizon, k too large).
class RangeError : public Error {
public:
    using Error::Error;
};

// Memory guard exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

// Malformed or invariant-violating input data.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Grid too coarse for the oscillations it must resolve.
class SamplingError : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

}  // namespace taub
