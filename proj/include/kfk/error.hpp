#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kfk {

enum class ErrorCode {
  InvalidInput,
  Overflow,
  NotAKnot,
  TrivialRelator,
  NotCyclicallyReduced,
  NonzeroTotal,
  NonzeroWeightRequired,
  MeridianSlope,
  WindingNotCoprime,
  ZeroWeight,
  ZeroPolynomial,
  InexactDivision,
  Falsification,
};

constexpr std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotAKnot: return "NotAKnot";
    case ErrorCode::TrivialRelator: return "TrivialRelator";
    case ErrorCode::NotCyclicallyReduced: return "NotCyclicallyReduced";
    case ErrorCode::NonzeroTotal: return "NonzeroTotal";
    case ErrorCode::NonzeroWeightRequired: return "NonzeroWeightRequired";
    case ErrorCode::MeridianSlope: return "MeridianSlope";
    case ErrorCode::WindingNotCoprime: return "WindingNotCoprime";
    case ErrorCode::ZeroWeight: return "ZeroWeight";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::Falsification: return "Falsification";
  }
  return "Unknown";
}

/// Domain error raised by every kfk operation. The code names the failed
/// precondition; what() carries a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace kfk
