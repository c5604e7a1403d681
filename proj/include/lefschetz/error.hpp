#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lefschetz {

enum class ErrorCode {
  NonPrimeModulus,
  NonSquare,
  NotMaximalRank,
  ZeroInput,
  DimensionMismatch,
  NotArtinian,
  NotLevel,
  WlpFailsInCharZero,
  NonMinimalGenerators,
  ConditionsNotMet,
  NotSquare,
  TooLarge,
  Unbalanced,
  NotArtinianInstance,
  DegreeTooSmall,
  Unsorted,
  UnsupportedShape,
  SyntaxError,
  UndeclaredVariable,
  InvalidArgument,
};

auto to_string(ErrorCode code) -> std::string_view;

/// Every contract violation surfaced by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  [[nodiscard]] auto code() const noexcept -> ErrorCode { return code_; }

private:
  ErrorCode code_;
};

/// Parse failures additionally report the byte offset into the input.
class ParseError : public Error {
public:
  ParseError(ErrorCode code, std::size_t position, const std::string &what)
      : Error(code, what + " at position " + std::to_string(position)),
        position_(position) {}

  [[nodiscard]] auto position() const noexcept -> std::size_t { return position_; }

private:
  std::size_t position_;
};

} // namespace lefschetz
