#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cohext {

enum class ErrorCode {
  NonPrime,
  ReducibleModulus,
  DegreeMismatch,
  Unsupported,
  DivisionByZero,
  DimensionMismatch,
  NotAugmented,
  NotPMapCompatible,
  NotInvertible,
  NotCocycle,
  NotCoboundary,
  NotZCharacteristic,
  NotAdmissible,
  InvalidType,
  InvalidData,
  TypeMismatch,
  OutOfRange,
  BudgetExceeded,
  MissingRecord,
  MalformedInput,
};

std::string_view to_string(ErrorCode code);

/// The single exception type thrown by the library. Callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cohext
