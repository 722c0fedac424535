#pragma once

#include <stdexcept>
#include <string>

namespace utilscope {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid values, broken invariants, malformed configs or table rows.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Layer chains that do not line up (channel/feature mismatches, bad dims).
class ShapeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Filesystem problems: missing files, unreadable or unwritable paths.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace utilscope
