#pragma once

#include <stdexcept>
#include <string>

namespace klc {

// Bad field/run configuration (reducible modulus, r out of range, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation called outside its mathematical domain (inverse of zero, a = 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Request exceeds the brute-force / full-expansion size bounds.
class ScaleError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A construction produced something that violates its own invariant.
// Always a bug in this library, never a user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace klc
