#include "equicode/error.hpp"

namespace equicode {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidMatrix: return "InvalidMatrix";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::NotRealizable: return "NotRealizable";
    case ErrorKind::NotUnitDiagonal: return "NotUnitDiagonal";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidIndex: return "InvalidIndex";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::InvalidCode: return "InvalidCode";
    case ErrorKind::ZeroProjection: return "ZeroProjection";
    case ErrorKind::NotAClique: return "NotAClique";
    case ErrorKind::SingularGram: return "SingularGram";
    case ErrorKind::InternalError: return "InternalError";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::RandomizedFailure: return "RandomizedFailure";
    case ErrorKind::NotAnLCode: return "NotAnLCode";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::NoClique: return "NoClique";
    case ErrorKind::NotEquiangular: return "NotEquiangular";
    case ErrorKind::WrongStructure: return "WrongStructure";
    case ErrorKind::ExcludedAngle: return "ExcludedAngle";
    case ErrorKind::NotFinite: return "NotFinite";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace equicode
