#pragma once

#include <stdexcept>
#include <string>

namespace cmub {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape mismatch between matrices, bases and subsystems.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A subsystem label that is unknown, duplicated or used in overlapping sets.
class LabelError : public Error {
 public:
  using Error::Error;
};

// Input data that breaks a documented invariant. `invariant()` names the
// check that failed (e.g. "trace", "hermitian", "partition").
class ValidationError : public Error {
 public:
  ValidationError(std::string invariant, const std::string& what)
      : Error(invariant + ": " + what), invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

// Requested a MUB construction for a dimension we have no table or rule for.
class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

// A computed result failed one of its post-conditions.
class InvariantViolation : public Error {
 public:
  InvariantViolation(std::string invariant, const std::string& what)
      : Error(invariant + ": " + what), invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

}  // namespace cmub
