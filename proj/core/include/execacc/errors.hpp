#pragma once

#include <stdexcept>
#include <string>

namespace execacc {

// Root of every error the library throws. Each subclass maps to one failure
// class that callers (notably the CLI) distinguish.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An input value or configuration violates a documented invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A required configuration item is missing or inconsistent with the selected mode.
class ConfigError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// A metric was requested over an empty sample.
class UndefinedMetricError : public Error {
public:
    using Error::Error;
};

class IncompleteTraceError : public Error {
public:
    using Error::Error;
};

class OutOfWindowError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ShapeError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class LookupError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace execacc
