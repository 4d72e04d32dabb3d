#pragma once

#include <stdexcept>
#include <string>

namespace workbench {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on arguments was violated (bad index, rank mismatch, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed text or file input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A tensor that is not in the image of the PBW embedding.
class NotLieElement : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace workbench
