#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lgk {

enum class ErrorCode {
  InvalidType,
  DatumMismatch,
  InvalidScaling,
  InvalidAutomorphism,
  InvalidData,
  UnassignedSymbol,
  ConstructionFailure,
  InvalidRCochain,
  WitnessNotFound,
  InconclusiveBound,
  DimensionMismatch,
  InvalidCharacter,
  NotAutomorphism,
  EnumerationCap,
  Overflow,
  InvalidSpec,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// that the verification driver can map it onto a report status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lgk
