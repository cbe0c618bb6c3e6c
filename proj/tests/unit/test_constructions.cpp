#include <doctest.h>

#include <cmath>

#include "equicode/codes.hpp"
#include "equicode/constructions.hpp"
#include "equicode/error.hpp"
#include "equicode/rng.hpp"

using namespace equicode;

TEST_CASE("binomial coefficients") {
  CHECK(binomial(8, 2) == 28);
  CHECK(binomial(24, 2) == 276);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(200, 100) == UINT64_MAX);
}

TEST_CASE("lemmens-seidel Gram structure") {
  const auto g = lemmens_seidel_gram(4);
  CHECK(g.order() == 6);
  CHECK(g(0, 1) == Rational(-1, 3));
  CHECK(g(0, 2) == Rational(1, 3));
  CHECK(g(2, 3) == Rational(-1, 3));
  CHECK(rank_of(g) == 4);
  const Code c = lemmens_seidel_code(4);
  CHECK(c.size() == 6);
  CHECK(c.dim() == 4);
  CHECK_THROWS_AS(lemmens_seidel_code(2), Error);
}

TEST_CASE("lemmens-seidel zero eigenvalue multiplicity is n-2") {
  for (std::size_t n : {3u, 6u, 15u}) {
    const auto s = sym_eigen(to_float(lemmens_seidel_gram(n)));
    std::size_t zeros = 0;
    for (double x : s.eigenvalues)
      if (std::abs(x) < 1e-9) ++zeros;
    CHECK(zeros == n - 2);
  }
}

TEST_CASE("odd reciprocal code") {
  const auto g = odd_reciprocal_gram(10, 3);
  CHECK(g.order() == 12);
  CHECK(g(0, 1) == Rational(-1, 5));
  CHECK(g(0, 3) == Rational(1, 5));
  const Code c = odd_reciprocal_code(10, 3);
  CHECK(c.size() == 12);
  CHECK(c.dim() <= 10);
  CHECK(*detect_equiangular(c) == doctest::Approx(0.2));
  CHECK_THROWS_AS(odd_reciprocal_code(10, 1), Error);
}

TEST_CASE("28 lines in seven dimensions") {
  const Code c = seven_dim_28_lines();
  CHECK(c.size() == 28);
  CHECK(c.dim() == 8);
  CHECK(validate_code(c, AngleSet::of_points({-1.0 / 3.0, 1.0 / 3.0})).pass);
  CHECK(code_rank(c) == 7);
  // Orthogonal to the all-ones vector.
  for (std::size_t i = 0; i < c.size(); ++i) {
    double s = 0.0;
    for (double x : c[i]) s += x;
    CHECK(std::abs(s) < 1e-12);
  }
}

TEST_CASE("regular simplex") {
  for (std::size_t r = 1; r <= 8; ++r) {
    const Code s = regular_simplex(r);
    CHECK(s.size() == r + 1);
    CHECK(s.dim() == r);
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) CHECK(s.inner(i, j) == doctest::Approx(-1.0 / r));
  }
  CHECK(simplex_gram(3)(0, 1) == Rational(-1, 3));
  CHECK_THROWS_AS(regular_simplex(0), Error);
}

TEST_CASE("binary k-code inner products") {
  const Code c = binary_kcode(6, 2);
  CHECK(c.size() == 15);
  CHECK(validate_code(c, AngleSet::of_points({0.0, 0.5})).pass);
  CHECK(binary_kcode(5, 1).size() == 5);
  CHECK_THROWS_AS(binary_kcode(40, 20), Error);
  CHECK_THROWS_AS(binary_kcode(3, 4), Error);
}

TEST_CASE("random orthogonal matrices are orthogonal and seed-determined") {
  RngStream a(9), b(9);
  const auto q = random_orthogonal(12, a);
  CHECK(q == random_orthogonal(12, b));
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < 12; ++k) s += q[i * 12 + k] * q[j * 12 + k];
      CHECK(s == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
    }
}

TEST_CASE("rotation preserves inner products") {
  RngStream rng(4);
  const Code c = binary_kcode(6, 3);
  const Code r = rotate(c, random_orthogonal(6, rng));
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) CHECK(r.inner(i, j) == doctest::Approx(c.inner(i, j)).epsilon(1e-12));
}

TEST_CASE("concatenated code parameters") {
  const auto p = ConcatParams::make(30, 2, 3, 0.5, 0);
  CHECK(p.lambda == doctest::Approx(1.0));
  CHECK(p.alphas.size() == 2);
  CHECK(p.alphas[0] == doctest::Approx(0.5));
  CHECK(p.alphas[1] == doctest::Approx(0.75));
  CHECK(p.beta_target == doctest::Approx((1.0 / 3.0 - p.t_threshold) / 2.0));
  CHECK_THROWS_AS(ConcatParams::make(30, 2, 6, 0.5, 0), Error);
  CHECK_THROWS_AS(ConcatParams::make(30, 2, 3, 1.0, 0), Error);
}

TEST_CASE("concatenated code is reproducible") {
  const auto p = ConcatParams::make(16, 2, 2, 0.5, 3);
  const auto a = concatenated_code(p);
  const auto b = concatenated_code(p);
  CHECK(a.code.size() == 3 * 120);
  CHECK(a.code.dim() == 18);
  CHECK(a.code.coordinates() == b.code.coordinates());
  CHECK(a.achieved_beta == b.achieved_beta);
  CHECK(a.report.within_copy_max_deviation <= 1e-9);
}
