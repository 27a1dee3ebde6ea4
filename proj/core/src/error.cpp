#include "probrob/error.hpp"

namespace probrob {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInstance: return "invalid-instance";
    case ErrorKind::kInvalidDimension: return "invalid-dimension";
    case ErrorKind::kInvalidRadius: return "invalid-radius";
    case ErrorKind::kInvalidGrid: return "invalid-grid";
    case ErrorKind::kOutOfRange: return "out-of-range";
    case ErrorKind::kInvalidTolerance: return "invalid-tolerance";
    case ErrorKind::kIndexError: return "index-error";
    case ErrorKind::kIncompatibleDomain: return "incompatible-domain";
    case ErrorKind::kCorruptedInput: return "corrupted-input";
    case ErrorKind::kIndicatorFailure: return "indicator-failure";
    case ErrorKind::kDimensionMismatch: return "dimension-mismatch";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kInvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace probrob
