#include <doctest.h>

#include <cmath>
#include <utility>
#include <vector>

#include "equicode/codes.hpp"
#include "equicode/constructions.hpp"
#include "equicode/error.hpp"
#include "equicode/graphlab.hpp"
#include "equicode/rng.hpp"

using namespace equicode;

namespace {

SimpleGraph random_graph(std::size_t n, double p, RngStream& rng) {
  SimpleGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.uniform() < p) g.add_edge(i, j);
  return g;
}

EdgeColoring random_coloring(std::size_t n, std::size_t k, RngStream& rng) {
  EdgeColoring f;
  f.n = n;
  f.k = k;
  f.colors.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto c = static_cast<std::uint32_t>(rng.below(k));
      f.colors[i * n + j] = c;
      f.colors[j * n + i] = c;
    }
  return f;
}

}  // namespace

TEST_CASE("simple graph basics") {
  const std::vector<std::pair<std::size_t, std::size_t>> edges{{0, 1}, {1, 2}, {1, 2}, {3, 3}};
  const SimpleGraph g = SimpleGraph::from_edges(4, edges);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.max_degree() == 2);
  CHECK(g.min_degree() == 0);
  const std::vector<std::size_t> keep{1, 2};
  CHECK(g.induced(keep).edge_count() == 1);
}

TEST_CASE("spectral radius of standard graphs") {
  SimpleGraph k4(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) k4.add_edge(i, j);
  CHECK(spectral_radius(k4) == doctest::Approx(3.0));
  SimpleGraph star(6);
  for (std::size_t i = 1; i < 6; ++i) star.add_edge(0, i);
  CHECK(std::abs(spectral_radius(star) - std::sqrt(5.0)) < 1e-9);
  CHECK(spectral_radius(SimpleGraph(3)) == 0.0);
}

TEST_CASE("spectral radius is monotone under subgraphs") {
  RngStream rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const SimpleGraph g = random_graph(15, 0.3, rng);
    std::vector<std::size_t> sub;
    for (std::size_t v = 0; v < 15; ++v)
      if (rng.uniform() < 0.6) sub.push_back(v);
    if (sub.empty()) continue;
    CHECK(spectral_radius(g.induced(sub)) <= spectral_radius(g) + 1e-9);
  }
}

TEST_CASE("labelled graph of the 28 lines") {
  const AngleSet L = AngleSet::of_points({-1.0 / 3.0, 1.0 / 3.0});
  const LabelledGraph g = build_graph(seven_dim_28_lines(), L);
  CHECK(g.size() == 28);
  CHECK(g.negative_class() == std::optional<std::size_t>(0));
  const DegreeStats s = gamma_degree_stats(g);
  // Two -3 positions: disjoint pairs give -1/3, pairs sharing one give 1/3.
  CHECK(s.max_degree[0] == 15);
  CHECK(s.average_degree[1] == doctest::Approx(12.0));
  CHECK_THROWS_AS(build_graph(seven_dim_28_lines(), AngleSet::of_points({0.5})), Error);
}

TEST_CASE("greedy independent set meets the Turan-type bound") {
  RngStream rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 10 + rng.below(40);
    const SimpleGraph g = random_graph(n, 0.2, rng);
    const auto s = greedy_independent_set(g);
    CHECK(static_cast<double>(s.size()) >= static_cast<double>(n) / (g.max_degree() + 1.0));
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) CHECK_FALSE(g.has_edge(s[i], s[j]));
  }
}

TEST_CASE("ramsey pair invariants on random colourings") {
  RngStream rng(2);
  for (std::size_t k : {2u, 3u}) {
    const std::size_t t = 2, m = 1;
    std::size_t need = 1;
    for (std::size_t i = 0; i < k * t; ++i) need *= k;
    const std::size_t n = need * m + 1;
    for (int trial = 0; trial < 5; ++trial) {
      const EdgeColoring f = random_coloring(n, k, rng);
      const auto pair = ramsey_pair(f, t, m);
      CHECK(pair.y.size() == t);
      CHECK(pair.x.size() == m);
      CHECK(pair.trace.size() == k * t);
      CHECK(is_monochromatic(f, pair));
    }
  }
  const EdgeColoring tiny = random_coloring(4, 2, rng);
  try {
    ramsey_pair(tiny, 2, 1);
    FAIL("expected TooSmall");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooSmall);
  }
}

TEST_CASE("negative structure of the Lemmens-Seidel code") {
  const AngleSet L = AngleSet::of_points({-1.0 / 3.0, 1.0 / 3.0});
  const auto rep = negative_structure_report(build_graph(lemmens_seidel_code(6), L));
  CHECK(rep.is_matching);
  CHECK(rep.components.size() == 5);
  CHECK(rep.max_degree == 1);
}

TEST_CASE("ball bound on random graphs") {
  RngStream rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const SimpleGraph g = random_graph(40, 0.2, rng);
    if (g.min_degree() < 2) continue;
    for (std::size_t radius = 2; radius <= 4; ++radius) {
      const auto ball = ball_subgraph_lambda(g, 0, radius);
      CHECK(ball.lambda1 >= ball_lambda_bound(g.min_degree(), radius) - 1e-9);
    }
  }
  CHECK(ball_lambda_bound(2, 3) == doctest::Approx(1.5));
}

TEST_CASE("spectral catalog thresholds") {
  for (const auto& c : catalog_lambda_checks(0, 10)) {
    INFO(c.name);
    CHECK(c.pass);
  }
}

TEST_CASE("reduction accounting on the Lemmens-Seidel code") {
  const Code c = lemmens_seidel_code(10);
  const auto full = reduction_pipeline(c, 9);
  CHECK(full.accounted == full.total);
  CHECK(full.y.size() == 9);
  CHECK(full.s_y.empty());
  CHECK_FALSE(full.projected.has_value());

  const auto part = reduction_pipeline(c, 4);
  CHECK(part.accounted == part.total);
  CHECK(part.s_y.size() == 10);
  REQUIRE(part.projected.has_value());
  const AngleParams p = AngleParams::make(1.0 / 3.0, 4);
  CHECK(validate_code(*part.projected, angle_set_after_projection(p, 1e-8)).pass);
}

TEST_CASE("reduction of the 28 lines") {
  const auto out = reduction_pipeline(seven_dim_28_lines(), 4);
  CHECK(out.total == 28);
  CHECK(out.accounted == 28);
  CHECK(out.y.size() == 4);
}

TEST_CASE("reduction rejects non-equiangular input") {
  try {
    reduction_pipeline(binary_kcode(5, 2), 2);
    FAIL("expected NotEquiangular");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotEquiangular);
  }
}

TEST_CASE("reduction of a simplex finds no positive clique") {
  try {
    reduction_pipeline(regular_simplex(5), 2);
    FAIL("expected NoClique");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoClique);
  }
}

TEST_CASE("lambda inequality on a projected code") {
  const auto out = reduction_pipeline(lemmens_seidel_code(10), 4);
  REQUIRE(out.projected.has_value());
  const auto cert = lambda_inequality_check(*out.projected, AngleParams::make(1.0 / 3.0, 4));
  CHECK(cert.pass);
}
