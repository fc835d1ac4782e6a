#pragma once

#include <stdexcept>
#include <string>

namespace electra {

/// Base class for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An election value would violate its invariants.
class InvalidElection : public Error {
 public:
  using Error::Error;
};

/// Operation requires a complete election.
class IncompleteElection : public Error {
 public:
  IncompleteElection() : Error("operation requires a complete election") {}
};

/// Exact solver refused an instance beyond its guard.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

/// Correlation is undefined (fewer than two points or zero variance).
class UndefinedCorrelation : public Error {
 public:
  using Error::Error;
};

/// Inputs do not match in shape (dimensions, candidate sets, m).
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace electra
