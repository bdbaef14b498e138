#pragma once

#include <stdexcept>
#include <string>

namespace beamsym {

/// Base class for all beamsym exceptions.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numeric evaluation failure: domain violation (log of a non-positive value,
/// division by zero, ...) or a non-finite intermediate result. The message
/// names the offending primitive and the value or point where it occurred.
class EvalError : public Error {
public:
    using Error::Error;
};

/// A constructor or operation was handed parameters outside its admissible set.
class ParamError : public Error {
public:
    using Error::Error;
};

/// Malformed configuration text or expression string.
class SchemaError : public Error {
public:
    using Error::Error;
};

} // namespace beamsym
