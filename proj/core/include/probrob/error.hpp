#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace probrob {

enum class ErrorKind {
  kInvalidInstance,
  kInvalidDimension,
  kInvalidRadius,
  kInvalidGrid,
  kOutOfRange,
  kInvalidTolerance,
  kIndexError,
  kIncompatibleDomain,
  kCorruptedInput,
  kIndicatorFailure,
  kDimensionMismatch,
  kPrecondition,
  kInvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers can branch
/// without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace probrob
