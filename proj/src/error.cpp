#include "wldu/error.hpp"

namespace wldu {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::TooLargeForTableMode: return "TooLargeForTableMode";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DNotDivisor: return "DNotDivisor";
    case ErrorCode::ZeroDirection: return "ZeroDirection";
    case ErrorCode::PreconditionNotPP: return "PreconditionNotPP";
    case ErrorCode::LambdaNotInH: return "LambdaNotInH";
    case ErrorCode::MuEqualsLambdaForCase2: return "MuEqualsLambdaForCase2";
    case ErrorCode::SNotGreaterThanOne: return "SNotGreaterThanOne";
    case ErrorCode::SNotEven: return "SNotEven";
    case ErrorCode::DNotEven: return "DNotEven";
    case ErrorCode::WrongCongruenceClass: return "WrongCongruenceClass";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::EngineMismatch: return "EngineMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace wldu
