#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace homcalc {

enum class ErrorCode {
  DimensionMismatch,
  NotPrime,
  NonAssociative,
  BadUnit,
  BadIdempotents,
  RadicalNotIdeal,
  RadicalNotNilpotent,
  RelationNotLengthHomogeneous,
  PathExplosion,
  AlgebraMismatch,
  InvalidModule,
  InvalidMorphism,
  TopDecompositionFailed,
  SourceNotProjective,
  CutoffExceeded,
  NotCertifiedGP,
  UnsupportedKind,
  MembershipNotCertified,
  NoGeneratorData,
  NoCogeneratorData,
  DimensionNotExact,
  UnknownPropertyId,
  UnknownConjectureId,
  ParseError,
  ValidationError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
/// `location()` is a JSON pointer for parse/validation failures and a
/// free-form locator (triple, pair, power, node index) otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::string location = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        location_(std::move(location)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& location() const noexcept { return location_; }

 private:
  ErrorCode code_;
  std::string location_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NonAssociative: return "NonAssociative";
    case ErrorCode::BadUnit: return "BadUnit";
    case ErrorCode::BadIdempotents: return "BadIdempotents";
    case ErrorCode::RadicalNotIdeal: return "RadicalNotIdeal";
    case ErrorCode::RadicalNotNilpotent: return "RadicalNotNilpotent";
    case ErrorCode::RelationNotLengthHomogeneous: return "RelationNotLengthHomogeneous";
    case ErrorCode::PathExplosion: return "PathExplosion";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::InvalidModule: return "InvalidModule";
    case ErrorCode::InvalidMorphism: return "InvalidMorphism";
    case ErrorCode::TopDecompositionFailed: return "TopDecompositionFailed";
    case ErrorCode::SourceNotProjective: return "SourceNotProjective";
    case ErrorCode::CutoffExceeded: return "CutoffExceeded";
    case ErrorCode::NotCertifiedGP: return "NotCertifiedGP";
    case ErrorCode::UnsupportedKind: return "UnsupportedKind";
    case ErrorCode::MembershipNotCertified: return "MembershipNotCertified";
    case ErrorCode::NoGeneratorData: return "NoGeneratorData";
    case ErrorCode::NoCogeneratorData: return "NoCogeneratorData";
    case ErrorCode::DimensionNotExact: return "DimensionNotExact";
    case ErrorCode::UnknownPropertyId: return "UnknownPropertyId";
    case ErrorCode::UnknownConjectureId: return "UnknownConjectureId";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

}  // namespace homcalc
