#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "equicode/code.hpp"
#include "equicode/constructions.hpp"
#include "equicode/error.hpp"
#include "equicode/matcore.hpp"
#include "equicode/rng.hpp"

using namespace equicode;

namespace {

SymMatrix random_symmetric(std::size_t n, RngStream& rng) {
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m.set(i, j, 2.0 * rng.uniform() - 1.0);
  return m;
}

}  // namespace

TEST_CASE("tolerance parsing") {
  const Tolerance d;
  CHECK(d.eig_zero == 1e-8);
  CHECK(d.psd_slack == 1e-9);
  CHECK(d.angle_tol == 1e-9);
  CHECK(Tolerance::parse("1e-7").angle_tol == 1e-7);
  const Tolerance t = Tolerance::parse("eig_zero=1e-6,psd_slack=1e-5");
  CHECK(t.eig_zero == 1e-6);
  CHECK(t.psd_slack == 1e-5);
  CHECK(t.angle_tol == 1e-9);
  CHECK_THROWS_AS(Tolerance::parse("bogus=1"), Error);
  CHECK_THROWS_AS(Tolerance::parse("-1"), Error);
}

TEST_CASE("symmetric matrix rejects asymmetric rows") {
  CHECK_THROWS_AS(SymMatrix::from_rows({{1, 2}, {3, 1}}), Error);
  CHECK_THROWS_AS(SymMatrix(0), Error);
}

TEST_CASE("jacobi eigenvalues of a 2x2 matrix") {
  const auto s = sym_eigen(SymMatrix::from_rows({{2, 1}, {1, 2}}));
  CHECK(s.eigenvalues[0] == doctest::Approx(3.0));
  CHECK(s.eigenvalues[1] == doctest::Approx(1.0));
  CHECK(s.residual < 1e-12);
}

TEST_CASE("eigenpairs reconstruct random matrices") {
  RngStream rng(11);
  for (std::size_t n : {1u, 2u, 5u, 17u, 40u}) {
    const SymMatrix m = random_symmetric(n, rng);
    const auto s = sym_eigen(m);
    CHECK(s.residual < 1e-9);
    for (std::size_t k = 1; k < n; ++k) CHECK(s.eigenvalues[k - 1] >= s.eigenvalues[k]);
    double tr = 0.0;
    for (double x : s.eigenvalues) tr += x;
    CHECK(tr == doctest::Approx(m.trace()).epsilon(1e-10));
  }
}

TEST_CASE("non-finite entries are rejected") {
  SymMatrix m(2);
  m.set(0, 1, std::nan(""));
  CHECK_THROWS_AS(sym_eigen(m), Error);
}

TEST_CASE("ranks of identity, all-ones and zero") {
  CHECK(rank_of(SymMatrix::identity(6)) == 6);
  CHECK(rank_of(SymMatrix::ones(6)) == 1);
  CHECK(rank_of(SymMatrix(4)) == 0);
  CHECK(rank_of(RationalSymMatrix::identity(6)) == 6);
  CHECK(rank_of(RationalSymMatrix::ones(6)) == 1);
  CHECK(rank_of(RationalSymMatrix(3)) == 0);
}

TEST_CASE("exact and float ranks agree on the Lemmens-Seidel Gram") {
  for (std::size_t n : {3u, 7u, 20u}) {
    const auto g = lemmens_seidel_gram(n);
    CHECK(rank_of(g) == n);
    CHECK(rank_of(to_float(g)) == n);
    const auto r = exact_psd_rank(g);
    CHECK(r.psd);
    CHECK(r.rank == n);
  }
}

TEST_CASE("exact psd detects a negative pivot") {
  RationalSymMatrix m(2, 2);
  m.set(0, 0, 1);
  m.set(1, 1, 1);
  const auto r = exact_psd_rank(m);
  CHECK_FALSE(r.psd);
  CHECK(r.failing_index.has_value());
  CHECK_FALSE(is_psd(m).pass);
  CHECK_FALSE(is_psd(to_float(m)).pass);
  CHECK(is_psd(SymMatrix::ones(3)).pass);
}

TEST_CASE("trace ratio lower-bounds the rank") {
  RngStream rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng.below(30);
    const SymMatrix m = random_symmetric(n, rng);
    CHECK(static_cast<double>(rank_of(m)) >= trace_rank_lower_bound(m) - 1e-9);
  }
  CHECK(trace_rank_lower_bound(RationalSymMatrix::identity(5)) == 5);
  CHECK(trace_rank_lower_bound(RationalSymMatrix::ones(5)) == 1);
  CHECK_THROWS_AS(trace_rank_lower_bound(SymMatrix(3)), Error);
}

TEST_CASE("embedding reproduces the Gram matrix") {
  const auto g = to_float(lemmens_seidel_gram(6));
  const Code c = embed_from_gram(g);
  CHECK(c.dim() == 6);
  CHECK(c.size() == 10);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) CHECK(std::abs(c.inner(i, j) - g(i, j)) < 1e-10);
}

TEST_CASE("embedding rejects bad Gram matrices") {
  SymMatrix notunit = SymMatrix::identity(2);
  notunit.set(0, 0, 2.0);
  CHECK_THROWS_AS(embed_from_gram(notunit), Error);
  SymMatrix indefinite = SymMatrix::identity(2);
  indefinite.set(0, 1, 2.0);
  try {
    embed_from_gram(indefinite);
    FAIL("expected NotRealizable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotRealizable);
  }
}

TEST_CASE("top eigenpair matches jacobi above and below the switch") {
  RngStream rng(3);
  const SymMatrix small = random_symmetric(20, rng);
  CHECK(top_eigenpair(small, 20.0).value == doctest::Approx(sym_eigen(small).eigenvalues[0]).epsilon(1e-9));
  const SymMatrix big = SymMatrix::ones(600);
  CHECK(top_eigenpair(big, 1.0).value == doctest::Approx(600.0).epsilon(1e-8));
}

TEST_CASE("quadratic forms") {
  const auto m = SymMatrix::from_rows({{2, 1}, {1, 3}});
  const std::vector<double> v{1, 1};
  CHECK(quadratic_form(m, v) == doctest::Approx(7.0));
  const std::vector<Rational> q{Rational(1, 2), Rational(1, 3)};
  CHECK(quadratic_form(RationalSymMatrix::identity(2), q) == Rational(13, 36));
  CHECK_THROWS_AS(quadratic_form(m, std::vector<double>{1}), Error);
}

TEST_CASE("rng is deterministic and in range") {
  RngStream a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  RngStream c(1);
  for (int i = 0; i < 1000; ++i) {
    const double u = c.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(c.below(7) < 7);
  }
  CHECK(RngStream::derive(1, 0) != RngStream::derive(1, 1));
  CHECK(RngStream::derive(1, 0) == RngStream::derive(1, 0));
}
