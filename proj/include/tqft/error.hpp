#pragma once

#include <stdexcept>
#include <string>

namespace tqft {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input documents.
class ParseError : public Error {
public:
    using Error::Error;
};

// Well-formed input that violates a data-model invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

// Numerical procedure failed to converge or to separate eigenvalues.
class NumericalError : public Error {
public:
    using Error::Error;
};

} // namespace tqft
