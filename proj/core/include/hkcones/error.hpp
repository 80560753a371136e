#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hkcones {

enum class ErrorCode {
  DegenerateQuadratic,
  IncompatibleRadicals,
  DivisionByZero,
  DimensionMismatch,
  SingularForm,
  UnknownFixture,
  InvalidFixture,
  ParseError,
  NotPseudoEffective,
  IncompleteExceptionalData,
  NotBig,
  NotAmple,
  NotMovable,
  RankUnsupported,
  TruncationExceeded,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Domain errors carry a code so callers (the CLI in particular) can map them
/// onto exit statuses without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// Usage-level failures (bad input text, malformed fixtures) as opposed to
  /// mathematical outcomes such as NotBig.
  bool is_input_error() const noexcept {
    return code_ == ErrorCode::ParseError || code_ == ErrorCode::UnknownFixture ||
           code_ == ErrorCode::InvalidFixture || code_ == ErrorCode::DimensionMismatch;
  }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(to_string(code)) + ": " + what);
}

}  // namespace hkcones
