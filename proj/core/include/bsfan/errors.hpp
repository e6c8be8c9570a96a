#pragma once

#include <stdexcept>
#include <string>

namespace bsfan {

/// Base class of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed serialized input (JSON syntax, bad rational literal, duplicate key).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Structurally well-formed input that violates a domain invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An explicit cohomology window was queried outside its declared range.
class RangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace bsfan
