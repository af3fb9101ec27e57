#pragma once

#include <stdexcept>
#include <string>

namespace zg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A hypothesis (domain, region, branch) could not be certified for the
/// input ball.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The input ball touches a pole of the function being evaluated.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A discrete parameter (e.g. floor of a ball) is ambiguous at the current
/// precision; retrying at higher precision may succeed.
class BoundaryError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Lookup of an unknown identifier.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace zg
