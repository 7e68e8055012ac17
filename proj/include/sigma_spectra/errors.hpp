#pragma once

#include <stdexcept>
#include <string>

namespace sigma_spectra {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPartition : public Error {
 public:
  using Error::Error;
};

/// A closed-form was evaluated outside the parameter range it is stated for.
class DomainError : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A part size exceeds the size of the class it is drawn from.
class InfeasibleShape : public Error {
 public:
  using Error::Error;
};

/// A construction was asked for a colour count it cannot produce.
class Infeasible : public Error {
 public:
  using Error::Error;
};

/// Unreadable or structurally wrong JSON input.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

/// Raised when a recolouring walk reaches a state that the no-gap argument
/// rules out, and the exact engine confirms the adjacent colour count is
/// infeasible.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace sigma_spectra
