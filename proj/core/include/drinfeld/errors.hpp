#pragma once

#include <stdexcept>
#include <string>

namespace drinfeld {

/// Input outside an operation's domain: zero polynomial, non-monic modulus,
/// reducible prime, rank or parity mismatch, non-coprime moduli.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured resource cap (extension degree, iteration count) was hit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The module does not have good reduction at the requested prime.
class BadReductionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The centralizer search could not certify an A-basis inside its window.
class InconclusiveBasisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Not enough auxiliary primes were available for coefficient reconstruction.
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. This always signals a bug.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed text input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace drinfeld
