#pragma once

#include <stdexcept>
#include <string>

namespace hampower {

// Precondition or parameter violation. CLI exit code 1.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Enumeration or size bound exceeded. CLI exit code 2.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An invariant that must hold by construction did not. CLI exit code 3.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Surd comparison across two distinct nonzero radicands.
class UnsupportedComparison : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace hampower
