#pragma once

#include <stdexcept>
#include <string>

namespace admerge {

// Error taxonomy mirrors the CLI exit codes: validation -> 1, I/O -> 2,
// numeric failure -> 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class ShapeError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class IoError : public Error {
public:
    using Error::Error;
};

class NumericError : public Error {
public:
    using Error::Error;
};

// External scorer process failed or produced garbage.
class ScorerError : public IoError {
public:
    using IoError::IoError;
};

}  // namespace admerge
