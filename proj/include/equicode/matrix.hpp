#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "equicode/error.hpp"

namespace equicode {

using Rational = mpq_class;

enum class Backend { rational, float64 };

namespace detail {
template <class T>
struct backend_of;
template <>
struct backend_of<double> {
  static constexpr Backend value = Backend::float64;
};
template <>
struct backend_of<Rational> {
  static constexpr Backend value = Backend::rational;
};
}  // namespace detail

/// Dense symmetric matrix. Symmetry is maintained by construction: set()
/// writes both (i,j) and (j,i), and from_rows() rejects asymmetric input.
template <class T>
class BasicSymMatrix {
 public:
  using value_type = T;

  explicit BasicSymMatrix(std::size_t order, const T& fill = T(0)) : n_(order), a_(order * order, fill) {
    if (order == 0) throw Error(ErrorKind::InvalidMatrix, "matrix order must be at least 1");
  }

  static BasicSymMatrix identity(std::size_t n) {
    BasicSymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = T(1);
    return m;
  }

  static BasicSymMatrix ones(std::size_t n) { return BasicSymMatrix(n, T(1)); }

  static BasicSymMatrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t n = rows.size();
    if (n == 0) throw Error(ErrorKind::InvalidMatrix, "empty matrix");
    BasicSymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) throw Error(ErrorKind::InvalidMatrix, "matrix is not square");
      for (std::size_t j = 0; j < n; ++j) m.a_[i * n + j] = rows[i][j];
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!(m.a_[i * n + j] == m.a_[j * n + i])) throw Error(ErrorKind::InvalidMatrix, "matrix is not symmetric");
    return m;
  }

  static constexpr Backend backend() noexcept { return detail::backend_of<T>::value; }

  std::size_t order() const noexcept { return n_; }

  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  void set(std::size_t i, std::size_t j, const T& value) {
    a_[i * n_ + j] = value;
    a_[j * n_ + i] = value;
  }

  std::span<const T> row(std::size_t i) const { return {a_.data() + i * n_, n_}; }

  /// Row-major storage, order() * order() entries.
  const std::vector<T>& data() const noexcept { return a_; }

  T trace() const {
    T s(0);
    for (std::size_t i = 0; i < n_; ++i) s += a_[i * n_ + i];
    return s;
  }

  /// trace(M^2) = sum of squared entries for symmetric M.
  T trace_of_square() const {
    T s(0);
    for (const T& x : a_) s += x * x;
    return s;
  }

  friend bool operator==(const BasicSymMatrix& a, const BasicSymMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

 private:
  std::size_t n_ = 0;
  std::vector<T> a_;
};

using SymMatrix = BasicSymMatrix<double>;
using RationalSymMatrix = BasicSymMatrix<Rational>;

inline SymMatrix to_float(const RationalSymMatrix& m) {
  SymMatrix out(m.order());
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = i; j < m.order(); ++j) out.set(i, j, m(i, j).get_d());
  return out;
}

}  // namespace equicode
