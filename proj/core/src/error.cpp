#include "hkcones/error.hpp"

namespace hkcones {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegenerateQuadratic: return "DegenerateQuadratic";
    case ErrorCode::IncompatibleRadicals: return "IncompatibleRadicals";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularForm: return "SingularForm";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::InvalidFixture: return "InvalidFixture";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotPseudoEffective: return "NotPseudoEffective";
    case ErrorCode::IncompleteExceptionalData: return "IncompleteExceptionalData";
    case ErrorCode::NotBig: return "NotBig";
    case ErrorCode::NotAmple: return "NotAmple";
    case ErrorCode::NotMovable: return "NotMovable";
    case ErrorCode::RankUnsupported: return "RankUnsupported";
    case ErrorCode::TruncationExceeded: return "TruncationExceeded";
  }
  return "Unknown";
}

}  // namespace hkcones
