#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace equicode {

enum class ErrorKind {
  InvalidMatrix,
  DegenerateInput,
  NotRealizable,
  NotUnitDiagonal,
  DimensionMismatch,
  InvalidIndex,
  InvalidParams,
  InvalidCode,
  ZeroProjection,
  NotAClique,
  SingularGram,
  InternalError,
  TooLarge,
  RandomizedFailure,
  NotAnLCode,
  TooSmall,
  NoClique,
  NotEquiangular,
  WrongStructure,
  ExcludedAngle,
  NotFinite,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when the randomized construction exhausts its retry budget.
class RandomizedFailure : public Error {
 public:
  RandomizedFailure(const std::string& message, double max_cross_inner_product)
      : Error(ErrorKind::RandomizedFailure, message), max_cross_(max_cross_inner_product) {}

  double max_cross_inner_product() const noexcept { return max_cross_; }

 private:
  double max_cross_;
};

}  // namespace equicode
