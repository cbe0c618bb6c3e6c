#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "equicode/certificate.hpp"
#include "equicode/matrix.hpp"

namespace equicode {

class Code;

/// Numerical thresholds shared by every check. All must be strictly positive.
struct Tolerance {
  double eig_zero = 1e-8;   // relative threshold below which an eigenvalue counts as zero
  double psd_slack = 1e-9;  // allowed relative negative dip in PSD verdicts
  double angle_tol = 1e-9;  // inner-product matching tolerance

  void validate() const;

  /// Parses "1e-7" (sets angle_tol) or "eig_zero=1e-8,psd_slack=1e-9,angle_tol=1e-9"
  /// (any subset) on top of `base`.
  static Tolerance parse(std::string_view text, Tolerance base);
  static Tolerance parse(std::string_view text);

  /// Defaults overridden by the EQUICODE_TOL environment variable when set.
  static Tolerance from_env();
};

struct Spectrum {
  std::vector<double> eigenvalues;   // descending
  std::vector<double> eigenvectors;  // column k occupies [k*order, (k+1)*order)
  double residual = 0.0;             // max_k ||M v_k - lambda_k v_k||_inf

  std::size_t order() const noexcept { return eigenvalues.size(); }
  std::span<const double> vector(std::size_t k) const { return {eigenvectors.data() + k * order(), order()}; }
};

/// Full eigendecomposition by cyclic Jacobi rotations. Throws InvalidMatrix on non-finite entries.
Spectrum sym_eigen(const SymMatrix& m);

std::size_t rank_of(const SymMatrix& m, const Tolerance& tol = {});
/// Exact rank by fraction-preserving Gaussian elimination.
std::size_t rank_of(const RationalSymMatrix& m);

Certificate is_psd(const SymMatrix& m, const Tolerance& tol = {});
Certificate is_psd(const RationalSymMatrix& m);

/// Result of exact symmetric (LDL^T-style) elimination with diagonal pivots.
struct ExactPsdResult {
  bool psd = false;
  std::size_t rank = 0;  // number of pivots taken; equals the rank when psd
  std::optional<std::size_t> failing_index;
  Rational failing_value;
};
ExactPsdResult exact_psd_rank(const RationalSymMatrix& m);

/// trace(M)^2 / trace(M^2), a lower bound on rank(M). Throws DegenerateInput for the zero matrix.
double trace_rank_lower_bound(const SymMatrix& m);
Rational trace_rank_lower_bound(const RationalSymMatrix& m);

/// Unit vectors in R^rank whose Gram matrix reproduces `m`.
Code embed_from_gram(const SymMatrix& m, const Tolerance& tol = {});

double quadratic_form(const SymMatrix& m, std::span<const double> v);
Rational quadratic_form(const RationalSymMatrix& m, std::span<const Rational> v);

/// Largest eigenvalue with an associated unit eigenvector.
struct TopEigenpair {
  double value = 0.0;
  std::vector<double> vector;
};
/// Jacobi for order <= 500, shifted power iteration (M + shift*I) above.
TopEigenpair top_eigenpair(const SymMatrix& m, double shift);

}  // namespace equicode
