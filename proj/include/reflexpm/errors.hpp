#pragma once

#include <stdexcept>
#include <string>

namespace reflexpm {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or precondition-violating input (CLI exit code 2).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Request exceeds a documented size or budget limit (CLI exit code 2).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// A mathematical check failed; `witness` is a machine-readable JSON
/// fragment describing the counterexample (CLI exit code 1).
class VerificationError : public Error {
 public:
  VerificationError(const std::string& what, std::string witness)
      : Error(what), witness_(std::move(witness)) {}
  [[nodiscard]] const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

/// Broken internal invariant, including integer overflow.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace reflexpm
