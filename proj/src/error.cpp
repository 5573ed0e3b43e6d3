#include "fqdist/error.hpp"

namespace fqdist {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NonPrime: return "NonPrime";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::BadDegree: return "BadDegree";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroParameter: return "ZeroParameter";
    case Errc::OddExponent: return "OddExponent";
    case Errc::DimensionTooSmall: return "DimensionTooSmall";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::EnumerationTooLarge: return "EnumerationTooLarge";
    case Errc::EmptySet: return "EmptySet";
    case Errc::WrongParity: return "WrongParity";
    case Errc::TooManyPairs: return "TooManyPairs";
    case Errc::UnsupportedDimension: return "UnsupportedDimension";
    case Errc::UnsupportedCase: return "UnsupportedCase";
    case Errc::SizeTooLarge: return "SizeTooLarge";
    case Errc::InvalidBasis: return "InvalidBasis";
    case Errc::InvalidElement: return "InvalidElement";
    case Errc::NonIntegralPrediction: return "NonIntegralPrediction";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace fqdist
