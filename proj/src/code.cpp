#include "equicode/code.hpp"

#include <cmath>
#include <string>

#include "equicode/error.hpp"

namespace equicode {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

Code::Code(std::size_t dim, std::vector<double> coords, double unit_tol) : dim_(dim), coords_(std::move(coords)) {
  if (dim_ == 0) throw Error(ErrorKind::InvalidCode, "dimension must be positive");
  if (coords_.empty()) throw Error(ErrorKind::InvalidCode, "a code must be non-empty");
  if (coords_.size() % dim_ != 0) throw Error(ErrorKind::InvalidCode, "coordinate count is not a multiple of dim");
  for (std::size_t i = 0; i < size(); ++i) {
    const double norm = std::sqrt(dot((*this)[i], (*this)[i]));
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > unit_tol)
      throw Error(ErrorKind::InvalidCode, "vector " + std::to_string(i) + " has norm " + std::to_string(norm));
  }
}

Code Code::from_vectors(const std::vector<std::vector<double>>& vectors, double unit_tol) {
  if (vectors.empty()) throw Error(ErrorKind::InvalidCode, "a code must be non-empty");
  const std::size_t dim = vectors.front().size();
  std::vector<double> coords;
  coords.reserve(dim * vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != dim) throw Error(ErrorKind::InvalidCode, "vectors have differing lengths");
    coords.insert(coords.end(), v.begin(), v.end());
  }
  return Code(dim, std::move(coords), unit_tol);
}

Code Code::normalized(std::size_t dim, std::vector<double> coords) {
  if (dim == 0 || coords.size() % dim != 0) throw Error(ErrorKind::InvalidCode, "bad coordinate layout");
  for (std::size_t off = 0; off < coords.size(); off += dim) {
    std::span<double> v(coords.data() + off, dim);
    const double norm = std::sqrt(dot(v, v));
    if (norm == 0.0 || !std::isfinite(norm)) throw Error(ErrorKind::InvalidCode, "cannot normalize a zero vector");
    for (double& x : v) x /= norm;
  }
  return Code(dim, std::move(coords));
}

std::vector<std::vector<double>> Code::to_vectors() const {
  std::vector<std::vector<double>> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.emplace_back((*this)[i].begin(), (*this)[i].end());
  return out;
}

Code Code::subset(std::span<const std::size_t> indices) const {
  std::vector<double> coords;
  coords.reserve(indices.size() * dim_);
  for (std::size_t i : indices) {
    if (i >= size()) throw Error(ErrorKind::InvalidIndex, "index " + std::to_string(i) + " out of range");
    const auto v = (*this)[i];
    coords.insert(coords.end(), v.begin(), v.end());
  }
  return Code(dim_, std::move(coords), 1.0);
}

}  // namespace equicode
