#pragma once

#include <stdexcept>
#include <string>

namespace mlab {

/// Every failure raised by the library carries one of these kinds so that
/// callers (the verifier and the CLI) can map it to a verdict or exit code.
enum class ErrorKind {
  OrderMismatch,
  RingMismatch,
  DivisionByZero,
  NonZeroRemainder,
  NonMonicLeft,
  NonMonic,
  LimitExceeded,
  InvalidSpec,
  NotPurePower,
  DuplicateAbscissa,
  BadPrime,
  InvalidArgument,
  ParseError,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace mlab
