#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace equicode {

double dot(std::span<const double> a, std::span<const double> b);

/// An ordered, non-empty list of unit vectors sharing one ambient dimension.
class Code {
 public:
  /// `coords` is row-major with `dim` entries per vector. Every vector must
  /// have norm within `unit_tol` of 1; throws InvalidCode otherwise.
  Code(std::size_t dim, std::vector<double> coords, double unit_tol = 1e-9);

  static Code from_vectors(const std::vector<std::vector<double>>& vectors, double unit_tol = 1e-9);

  /// Scales every row to unit length first; throws InvalidCode on a zero row.
  static Code normalized(std::size_t dim, std::vector<double> coords);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return coords_.size() / dim_; }

  std::span<const double> operator[](std::size_t i) const { return {coords_.data() + i * dim_, dim_}; }
  const std::vector<double>& coordinates() const noexcept { return coords_; }

  double inner(std::size_t i, std::size_t j) const { return dot((*this)[i], (*this)[j]); }

  std::vector<std::vector<double>> to_vectors() const;

  /// Vectors at the given indices, in the given order.
  Code subset(std::span<const std::size_t> indices) const;

 private:
  std::size_t dim_;
  std::vector<double> coords_;
};

}  // namespace equicode
