#pragma once

#include <stdexcept>
#include <string>

namespace choquet {

/// Malformed or out-of-contract input. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structural theorem that must hold on every finite instance was observed
/// to fail. The CLI maps this to exit code 1.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations that must agree did not (usually an LP
/// tolerance breach rather than bad input).
class ConsistencyError : public VerificationError {
 public:
  using VerificationError::VerificationError;
};

}  // namespace choquet
