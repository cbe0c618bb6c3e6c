#include "equicode/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "equicode/codes.hpp"

namespace equicode {

namespace {

constexpr std::uint64_t kBinaryCodeCap = 100000;

/// Exact PSD and rank <= max_rank check, then a float embedding of matching rank.
Code certify_and_embed(const RationalSymMatrix& gram, std::size_t expected_rank, const Tolerance& tol,
                       const char* what) {
  const ExactPsdResult exact = exact_psd_rank(gram);
  if (!exact.psd || exact.rank != expected_rank)
    throw Error(ErrorKind::InternalError, std::string(what) + ": Gram certification failed (psd=" +
                                              std::to_string(exact.psd) + ", rank=" + std::to_string(exact.rank) +
                                              ", expected " + std::to_string(expected_rank) + ")");
  Code code = embed_from_gram(to_float(gram), tol);
  if (code.dim() != expected_rank)
    throw Error(ErrorKind::InternalError, std::string(what) + ": floating rank disagrees with exact rank");
  return code;
}

void orthonormalize_rows(std::vector<double>& m, std::size_t dim) {
  for (std::size_t i = 0; i < dim; ++i) {
    std::span<double> row(m.data() + i * dim, dim);
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t j = 0; j < i; ++j) {
        std::span<const double> prev(m.data() + j * dim, dim);
        const double c = dot(row, prev);
        for (std::size_t k = 0; k < dim; ++k) row[k] -= c * prev[k];
      }
    const double norm = std::sqrt(dot(row, row));
    for (double& x : row) x /= norm;
  }
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

RationalSymMatrix lemmens_seidel_gram(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidParams, "lemmens-seidel needs n >= 3");
  const std::size_t m = 2 * n - 2;
  RationalSymMatrix g(m, Rational(1, 3));
  for (std::size_t i = 0; i < m; ++i) g.set(i, i, 1);
  for (std::size_t b = 0; b + 1 < n; ++b) g.set(2 * b, 2 * b + 1, Rational(-1, 3));
  return g;
}

Code lemmens_seidel_code(std::size_t n, const Tolerance& tol) {
  return certify_and_embed(lemmens_seidel_gram(n), n, tol, "lemmens-seidel");
}

RationalSymMatrix odd_reciprocal_gram(std::size_t n, std::size_t r) {
  if (r < 2) throw Error(ErrorKind::InvalidParams, "odd-reciprocal needs r >= 2");
  if (n < r) throw Error(ErrorKind::InvalidParams, "odd-reciprocal needs n >= r");
  const std::size_t blocks = (n - 1) / (r - 1);
  const Rational alpha(1, static_cast<unsigned long>(2 * r - 1));
  RationalSymMatrix g(blocks * r, alpha);
  for (std::size_t b = 0; b < blocks; ++b)
    for (std::size_t i = 0; i < r; ++i) {
      g.set(b * r + i, b * r + i, 1);
      for (std::size_t j = i + 1; j < r; ++j) g.set(b * r + i, b * r + j, -alpha);
    }
  return g;
}

Code odd_reciprocal_code(std::size_t n, std::size_t r, const Tolerance& tol) {
  const RationalSymMatrix g = odd_reciprocal_gram(n, r);
  const std::size_t blocks = (n - 1) / (r - 1);
  // Each block's all-ones vector is a null vector of the block part; the
  // global all-ones direction adds one back.
  const std::size_t expected = blocks * (r - 1) + 1;
  if (expected > n) throw Error(ErrorKind::InternalError, "odd-reciprocal rank exceeds dimension");
  return certify_and_embed(g, expected, tol, "odd-reciprocal");
}

Code seven_dim_28_lines() {
  const double scale = 1.0 / std::sqrt(24.0);
  std::vector<double> coords;
  coords.reserve(28 * 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j)
      for (std::size_t k = 0; k < 8; ++k) coords.push_back((k == i || k == j ? -3.0 : 1.0) * scale);
  return Code(8, std::move(coords));
}

RationalSymMatrix simplex_gram(std::size_t r) {
  if (r < 1) throw Error(ErrorKind::InvalidParams, "simplex needs r >= 1");
  RationalSymMatrix g(r + 1, Rational(-1, static_cast<unsigned long>(r)));
  for (std::size_t i = 0; i <= r; ++i) g.set(i, i, 1);
  return g;
}

Code regular_simplex(std::size_t r, const Tolerance& tol) {
  return certify_and_embed(simplex_gram(r), r, tol, "simplex");
}

Code binary_kcode(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw Error(ErrorKind::InvalidParams, "binary k-code needs 1 <= k <= n");
  const std::uint64_t count = binomial(n, k);
  if (count > kBinaryCodeCap) throw Error(ErrorKind::TooLarge, "C(n,k) exceeds the 1e5 cap");
  const double scale = 1.0 / std::sqrt(static_cast<double>(k));
  std::vector<double> coords;
  coords.reserve(count * n);
  std::vector<std::size_t> subset(k);
  for (std::size_t i = 0; i < k; ++i) subset[i] = i;
  while (true) {
    std::vector<double> v(n, 0.0);
    for (std::size_t i : subset) v[i] = scale;
    coords.insert(coords.end(), v.begin(), v.end());
    std::size_t pos = k;
    while (pos > 0 && subset[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++subset[pos - 1];
    for (std::size_t i = pos; i < k; ++i) subset[i] = subset[i - 1] + 1;
  }
  return Code(n, std::move(coords));
}

Code random_unit_vectors(std::size_t count, std::size_t dim, RngStream& rng) {
  if (count < 1 || dim < 1) throw Error(ErrorKind::InvalidParams, "count and dim must be positive");
  std::vector<double> coords(count * dim);
  for (std::size_t i = 0; i < count; ++i) {
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        coords[i * dim + k] = rng.gaussian();
        norm2 += coords[i * dim + k] * coords[i * dim + k];
      }
    } while (norm2 == 0.0);
  }
  return Code::normalized(dim, std::move(coords));
}

std::vector<double> random_orthogonal(std::size_t dim, RngStream& rng) {
  std::vector<double> m(dim * dim);
  for (double& x : m) x = rng.gaussian();
  orthonormalize_rows(m, dim);
  return m;
}

Code rotate(const Code& code, std::span<const double> q) {
  const std::size_t n = code.dim();
  if (q.size() != n * n) throw Error(ErrorKind::DimensionMismatch, "rotation order differs from code dimension");
  std::vector<double> coords(code.size() * n);
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t r = 0; r < n; ++r) coords[i * n + r] = dot(q.subspan(r * n, n), code[i]);
  return Code::normalized(n, std::move(coords));
}

ConcatParams ConcatParams::make(std::size_t n, std::size_t k, std::size_t r, double alpha1, std::uint64_t seed) {
  if (n < 1 || k < 1 || k > n || r < 1) throw Error(ErrorKind::InvalidParams, "need n, k, r >= 1 and k <= n");
  if (static_cast<double>(r) > std::sqrt(static_cast<double>(n)))
    throw Error(ErrorKind::InvalidParams, "need r <= sqrt(n)");
  if (!(alpha1 > 0.0 && alpha1 < 1.0)) throw Error(ErrorKind::InvalidParams, "alpha1 must lie in (0, 1)");
  if (binomial(n, k) > kBinaryCodeCap) throw Error(ErrorKind::TooLarge, "C(n,k) exceeds the 1e5 cap");
  ConcatParams p;
  p.n = n;
  p.k = k;
  p.r = r;
  p.alpha1 = alpha1;
  p.seed = seed;
  p.lambda = std::sqrt(1.0 / alpha1 - 1.0);
  const double l2 = p.lambda * p.lambda;
  const double nd = static_cast<double>(n);
  p.t_threshold = std::sqrt((4.0 * std::log(static_cast<double>(binomial(n, k))) + 2.0 * std::log(nd)) / nd);
  p.beta_target = (1.0 / static_cast<double>(r) - l2 * p.t_threshold) / (l2 + 1.0);
  for (std::size_t i = 1; i <= k; ++i)
    p.alphas.push_back((l2 * static_cast<double>(i - 1) / static_cast<double>(k) + 1.0) / (l2 + 1.0));
  return p;
}

ConcatResult concatenated_code(const ConcatParams& p, const Tolerance& tol) {
  const Code base = binary_kcode(p.n, p.k);
  const Code simplex = regular_simplex(p.r, tol);
  const std::size_t copies = p.r + 1;
  const std::size_t per_copy = base.size();
  const std::size_t dim = p.n + p.r;
  const double norm = std::sqrt(p.lambda * p.lambda + 1.0);

  double best_cross = std::numeric_limits<double>::infinity();
  for (std::size_t attempt = 0; attempt < p.max_attempts; ++attempt) {
    const std::uint64_t attempt_seed = p.seed + attempt;
    ConcatReport report;
    report.attempts = attempt + 1;
    report.seed_used = attempt_seed;
    report.copy_size = per_copy;

    std::vector<double> coords;
    coords.reserve(copies * per_copy * dim);
    for (std::size_t c = 0; c < copies; ++c) {
      const std::uint64_t copy_seed = RngStream::derive(attempt_seed, c);
      report.copy_seeds.push_back(copy_seed);
      RngStream rng(copy_seed);
      const Code rotated = rotate(base, random_orthogonal(p.n, rng));
      for (std::size_t i = 0; i < per_copy; ++i) {
        for (double x : rotated[i]) coords.push_back(p.lambda * x / norm);
        for (double x : simplex[c]) coords.push_back(x / norm);
      }
    }
    Code code(dim, std::move(coords));

    double max_cross = -std::numeric_limits<double>::infinity();
    double max_dev = 0.0;
    for (std::size_t i = 0; i < code.size(); ++i) {
      const std::size_t ci = i / per_copy;
      for (std::size_t j = i + 1; j < code.size(); ++j) {
        const double ip = code.inner(i, j);
        if (j / per_copy == ci) {
          double dev = std::numeric_limits<double>::infinity();
          for (double a : p.alphas) dev = std::min(dev, std::abs(ip - a));
          max_dev = std::max(max_dev, dev);
        } else {
          max_cross = std::max(max_cross, ip);
        }
      }
    }
    if (copies == 1) max_cross = -1.0;
    report.max_cross_inner_product = max_cross;
    report.within_copy_max_deviation = max_dev;
    if (max_dev > tol.angle_tol)
      throw Error(ErrorKind::InternalError, "within-copy inner products drifted from the alpha set");
    const double achieved_beta = -max_cross;
    report.event = achieved_beta >= p.beta_target;
    if (report.event) return {std::move(code), achieved_beta, std::move(report)};
    best_cross = std::min(best_cross, max_cross);
  }
  throw RandomizedFailure("no seed in the retry budget met the cross inner-product target", best_cross);
}

}  // namespace equicode
