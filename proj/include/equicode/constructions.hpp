#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "equicode/code.hpp"
#include "equicode/matcore.hpp"
#include "equicode/rng.hpp"

namespace equicode {

/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// n-1 diagonal blocks [[1,-1/3],[-1/3,1]], 1/3 elsewhere; order 2n-2, rank n.
RationalSymMatrix lemmens_seidel_gram(std::size_t n);
/// 2n-2 unit vectors in R^n with all inner products +-1/3.
Code lemmens_seidel_code(std::size_t n, const Tolerance& tol = {});

/// floor((n-1)/(r-1)) diagonal blocks of size r with -1/(2r-1) off the diagonal,
/// 1/(2r-1) elsewhere.
RationalSymMatrix odd_reciprocal_gram(std::size_t n, std::size_t r);
Code odd_reciprocal_code(std::size_t n, std::size_t r, const Tolerance& tol = {});

/// The 28 permutations of (1,1,1,1,1,1,-3,-3) scaled by 1/sqrt(24), ordered
/// lexicographically by the positions of the two -3 entries.
Code seven_dim_28_lines();

RationalSymMatrix simplex_gram(std::size_t r);
/// r+1 unit vectors in R^r with all pairwise inner products -1/r.
Code regular_simplex(std::size_t r, const Tolerance& tol = {});

/// All k-subset indicator vectors of {0..n-1} scaled by 1/sqrt(k), in
/// lexicographic subset order. Throws TooLarge when C(n,k) > 1e5.
Code binary_kcode(std::size_t n, std::size_t k);

/// Unit vectors from normalized i.i.d. Gaussian coordinates.
Code random_unit_vectors(std::size_t count, std::size_t dim, RngStream& rng);

/// Haar-distributed orthogonal matrix (row-major) from Gram-Schmidt on a Gaussian matrix.
std::vector<double> random_orthogonal(std::size_t dim, RngStream& rng);

/// Applies the row-major orthogonal matrix `q` to every vector of `code`.
Code rotate(const Code& code, std::span<const double> q);

struct ConcatParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t r = 0;
  double alpha1 = 0.0;
  double lambda = 0.0;       // sqrt(1/alpha1 - 1)
  double t_threshold = 0.0;  // sqrt((4 ln C(n,k) + 2 ln n) / n)
  double beta_target = 0.0;  // (1/r - lambda^2 t) / (lambda^2 + 1)
  std::vector<double> alphas;
  std::uint64_t seed = 0;
  std::size_t max_attempts = 32;

  static ConcatParams make(std::size_t n, std::size_t k, std::size_t r, double alpha1, std::uint64_t seed);
};

struct ConcatReport {
  bool event = false;  // achieved_beta >= beta_target
  std::size_t attempts = 0;
  std::uint64_t seed_used = 0;
  std::vector<std::uint64_t> copy_seeds;
  std::size_t copy_size = 0;
  double max_cross_inner_product = 0.0;
  double within_copy_max_deviation = 0.0;
};

struct ConcatResult {
  Code code;
  double achieved_beta = 0.0;
  ConcatReport report;
};

/// (1+r) C(n,k) unit vectors in R^{n+r}: randomly rotated copies of the binary
/// k-code attached to the vertices of a regular r-simplex. Retries seeds
/// seed, seed+1, ... and throws RandomizedFailure once max_attempts is spent.
ConcatResult concatenated_code(const ConcatParams& params, const Tolerance& tol = {});

}  // namespace equicode
