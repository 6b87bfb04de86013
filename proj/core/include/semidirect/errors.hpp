#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semidirect {

enum class ErrorKind {
  DimensionMismatch,
  NotASubspace,
  ShapeMismatch,
  ValidationFailed,
  NotSubmodule,
  NotBimodule,
  InvalidCharacter,
  NotHomomorphism,
  GammaIdentityFailed,
  NotADerivation,
  InternalInvariantViolation,
  UnknownHypothesis,
  WrongConstructionKind,
  ParseError,
  UnresolvedReference,
};

std::string_view to_string(ErrorKind kind);

/// Base exception for every failure raised by the library. The kind is
/// stable and is what the CLI reports; the message carries the witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace semidirect
