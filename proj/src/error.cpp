#include "lefschetz/error.hpp"

namespace lefschetz {

auto to_string(ErrorCode code) -> std::string_view {
  switch (code) {
  case ErrorCode::NonPrimeModulus: return "NonPrimeModulus";
  case ErrorCode::NonSquare: return "NonSquare";
  case ErrorCode::NotMaximalRank: return "NotMaximalRank";
  case ErrorCode::ZeroInput: return "ZeroInput";
  case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  case ErrorCode::NotArtinian: return "NotArtinian";
  case ErrorCode::NotLevel: return "NotLevel";
  case ErrorCode::WlpFailsInCharZero: return "WlpFailsInCharZero";
  case ErrorCode::NonMinimalGenerators: return "NonMinimalGenerators";
  case ErrorCode::ConditionsNotMet: return "ConditionsNotMet";
  case ErrorCode::NotSquare: return "NotSquare";
  case ErrorCode::TooLarge: return "TooLarge";
  case ErrorCode::Unbalanced: return "Unbalanced";
  case ErrorCode::NotArtinianInstance: return "NotArtinianInstance";
  case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
  case ErrorCode::Unsorted: return "Unsorted";
  case ErrorCode::UnsupportedShape: return "UnsupportedShape";
  case ErrorCode::SyntaxError: return "SyntaxError";
  case ErrorCode::UndeclaredVariable: return "UndeclaredVariable";
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

} // namespace lefschetz
