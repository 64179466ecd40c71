#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wldu {

enum class ErrorCode {
  NotPrime,
  EvenCharacteristic,
  TooLargeForTableMode,
  DivisionByZero,
  DNotDivisor,
  ZeroDirection,
  PreconditionNotPP,
  LambdaNotInH,
  MuEqualsLambdaForCase2,
  SNotGreaterThanOne,
  SNotEven,
  DNotEven,
  WrongCongruenceClass,
  NotAdmissible,
  EngineMismatch,
  InvalidArgument,
  Io,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wldu
