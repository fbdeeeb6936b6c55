#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

enum class Errc {
  ZeroVector,
  DimensionMismatch,
  InvalidArgument,
  EmptyPolytope,
  Unbounded,
  NotFullDimensional,
  DuplicateFacetLabelConflict,
  NotSimple,
  NotValid,
  EmptyCut,
  NoInteriorPoint,
  EpsilonTooLarge,
  NonSimpleResult,
  InvalidReeb,
  RankDeficient,
  SyntaxError,
};

constexpr std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::EmptyPolytope: return "EmptyPolytope";
    case Errc::Unbounded: return "Unbounded";
    case Errc::NotFullDimensional: return "NotFullDimensional";
    case Errc::DuplicateFacetLabelConflict: return "DuplicateFacetLabelConflict";
    case Errc::NotSimple: return "NotSimple";
    case Errc::NotValid: return "NotValid";
    case Errc::EmptyCut: return "EmptyCut";
    case Errc::NoInteriorPoint: return "NoInteriorPoint";
    case Errc::EpsilonTooLarge: return "EpsilonTooLarge";
    case Errc::NonSimpleResult: return "NonSimpleResult";
    case Errc::InvalidReeb: return "InvalidReeb";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

/// Domain error raised by every module. The code is stable and is what the
/// CLI reports; the message carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Raised by the `.poly` reader. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t line, std::size_t column, const std::string& message)
      : Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                        ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace toric
