#pragma once

#include <stdexcept>
#include <string>

namespace ciso {

enum class ErrorCode {
  DegenerateForm,
  UnsupportedPencil,
  NumericAmbiguity,
  OddDimension,
  DimensionMismatch,
  NotContact,
  FrameDegenerate,
  SingularMap,
  BadSpec,
  NotSymplectic,
  NotClosed,
  ParseError,
  ValidationError,
};

const char* error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ciso
