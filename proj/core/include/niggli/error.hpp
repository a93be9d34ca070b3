#pragma once

#include <stdexcept>
#include <string>

namespace niggli {

// Base of every error raised by the library. DomainError covers inputs that
// are well formed but geometrically unacceptable; the CLI maps it to exit 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidCell : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotPositiveDefinite : public InvalidCell {
 public:
  using InvalidCell::InvalidCell;
};

class NotReduced : public DomainError {
 public:
  using DomainError::DomainError;
};

class NonConvergence : public DomainError {
 public:
  using DomainError::DomainError;
};

class NoCandidate : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnknownCase : public DomainError {
 public:
  using DomainError::DomainError;
};

class InsufficientSamples : public DomainError {
 public:
  using DomainError::DomainError;
};

class RankAmbiguity : public DomainError {
 public:
  using DomainError::DomainError;
};

class InconsistentProjector : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegenerateVariance : public DomainError {
 public:
  using DomainError::DomainError;
};

class GeneratorStarvation : public DomainError {
 public:
  using DomainError::DomainError;
};

class ProjectionInvalidatesAll : public DomainError {
 public:
  using DomainError::DomainError;
};

// Malformed text (matrix notation, vectors, case lists).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A documented precondition was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace niggli
