#pragma once

#include <stdexcept>
#include <string>

namespace crig {

/// Process exit codes shared by the CLI and the error hierarchy below.
enum class ExitCode : int {
  Pass = 0,
  CheckFailure = 1,
  InputError = 2,
  PrecisionFailure = 3,
};

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual ExitCode exit_code() const noexcept { return ExitCode::CheckFailure; }
};

// Malformed input: parse errors, unknown generator symbols, bad JSON.
class InputError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const noexcept override { return ExitCode::InputError; }
};

class UnknownGeneratorError : public InputError {
 public:
  using InputError::InputError;
};

// Numeric degeneracy (evaluation at a pole, non-positive determinant).
class IllConditionedError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const noexcept override { return ExitCode::PrecisionFailure; }
};

class CompositionDomainError : public Error {
 public:
  using Error::Error;
};

class NoFixedPointError : public Error {
 public:
  using Error::Error;
};

class InvalidRepresentationError : public Error {
 public:
  using Error::Error;
};

// A value that should be an integer (or a rational with bounded denominator)
// is not close enough to one.
class PrecisionError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const noexcept override { return ExitCode::PrecisionFailure; }
};

// A certified interval fails to isolate a unique admissible value.
class IsolationError : public PrecisionError {
 public:
  using PrecisionError::PrecisionError;
};

class CrossValidationError : public Error {
 public:
  using Error::Error;
};

class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

class NotAHomomorphismError : public Error {
 public:
  using Error::Error;
};

class NotSurjectiveError : public Error {
 public:
  using Error::Error;
};

class InconsistentCoverError : public Error {
 public:
  using Error::Error;
};

class ConstructionError : public Error {
 public:
  using Error::Error;
};

class CertificationError : public Error {
 public:
  using Error::Error;
};

class MarkedPointNotFreeError : public Error {
 public:
  using Error::Error;
};

}  // namespace crig
