#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "equicode/certificate.hpp"
#include "equicode/code.hpp"
#include "equicode/codes.hpp"
#include "equicode/matcore.hpp"

namespace equicode {

/// p/q with q <= max_den when |x - p/q| <= 1e-12, from the continued fraction of x.
std::optional<Rational> rationalize(double x, long max_den = 10000);

/// |C| <= 1/alpha + 1 for a [-1, -alpha]-code; at equality the Gram matrix must
/// be the simplex Gram. Throws NotAnLCode.
Certificate negative_clique_certificate(const Code& code, double alpha, const Tolerance& tol = {});

/// Outer products x x^T of an equiangular set are linearly independent:
/// rank of the matrix (<x_i,x_j>^2) is m and m <= C(r+1, 2) with r the Gram
/// rank. Throws NotEquiangular.
Certificate gerzon_certificate(const Code& code, const Tolerance& tol = {});

/// |C| <= (1 + sigma^2 d)(rank + 1), d the average negative degree. Throws NotAnLCode.
Certificate schnirelman_applied_certificate(const Code& code, const AngleParams& params, const Tolerance& tol = {});

/// rank(M - eps J) = |C| and |C| <= rank(M) + 1 when the negative edges form a
/// matching. Throws ExcludedAngle (alpha = 1/3), NotAnLCode, WrongStructure.
Certificate matching_full_rank_certificate(const Code& code, const AngleParams& params, const Tolerance& tol = {});

/// 2B(beta+1) + 2A(1-alpha) <= |C|^2 over the union of `parts`, where A counts
/// edges >= alpha and B edges <= -beta. Throws WrongStructure when a part is not
/// an alpha-clique.
Certificate multipartite_certificate(const Code& code, std::span<const std::vector<std::size_t>> parts, double alpha,
                                     double beta, const Tolerance& tol = {});

/// |C| <= C(rank + |L|, |L|) for a finite L. Throws NotFinite, NotAnLCode.
Certificate dgs_bound_check(const Code& code, const AngleSet& allowed, const Tolerance& tol = {});

/// sum beta_i^2 <= 1 + alpha N sum beta_i^2 over the N edges of value <= -beta
/// at vertex x of a [-1,-beta] u {alpha}-code. Throws NotAnLCode.
Certificate beta_energy_check(const Code& code, double alpha, double beta, std::size_t x, const Tolerance& tol = {});

/// <Mv, v> >= 0 for v = (1/|X|,...,y,...,y,zeta) on X u Y u {z} with Y an
/// alpha-clique positively attached to X, and z negative to X.
Certificate one_angle_garbage_witness(const Code& code, std::span<const std::size_t> x, std::span<const std::size_t> y,
                                      std::size_t z, double alpha, double beta, const Tolerance& tol = {});

/// Same witness where X-z edges sit on the gamma side of alpha.
Certificate garbage_witness(const Code& code, std::span<const std::size_t> x, std::span<const std::size_t> y,
                            std::size_t z, double alpha, double gamma, const Tolerance& tol = {});

struct BoundTable {
  std::size_t n = 0;
  std::size_t k = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double gerzon = 0.0;      // C(n+1, 2)
  double dgs = 0.0;         // C(n+k, k)
  double neg_clique = 0.0;  // 1/beta + 1
  double equiangular_third = 0.0;       // 2n - 2
  double equiangular_general = 0.0;     // 1.93 n
  double projected_general = 0.0;       // 1.92 n
  double one_angle_spherical = 0.0;     // 2 (1 + max(alpha/beta, 0)) n
  double multi_angle_leading = 0.0;     // 2^k (k-1)! (1 + alpha/beta) n^k
};
BoundTable bound_table(std::size_t n, std::size_t k, double alpha, double beta);
nlohmann::json to_json(const BoundTable& table);

}  // namespace equicode
