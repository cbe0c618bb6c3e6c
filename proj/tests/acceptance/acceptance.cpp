// Runs each acceptance criterion and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "equicode/bounds.hpp"
#include "equicode/codes.hpp"
#include "equicode/constructions.hpp"
#include "equicode/error.hpp"
#include "equicode/graphlab.hpp"
#include "equicode/matcore.hpp"
#include "equicode/rng.hpp"

using namespace equicode;

namespace {

constexpr double kProjectionTol = 1e-8;
constexpr double kWithinCopyTol = 1e-9;
constexpr double kTraceSlack = 1e-9;
constexpr double kMultipartiteTol = 1e-10;
constexpr double kBallSlack = 1e-9;

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> v;
  for (std::size_t i = from; i < to; ++i) v.push_back(i);
  return v;
}

Outcome lemmens_seidel_family() {
  for (std::size_t n = 3; n <= 100; ++n) {
    const Code c = lemmens_seidel_code(n);
    if (c.size() != 2 * n - 2 || c.dim() != n) return fail("size or dimension wrong at n = " + std::to_string(n));
    const auto alpha = detect_equiangular(c);
    if (!alpha || std::abs(*alpha - 1.0 / 3.0) > 1e-9) return fail("angle is not 1/3 at n = " + std::to_string(n));
    const auto g = lemmens_seidel_gram(n);
    const auto psd = exact_psd_rank(g);
    if (!psd.psd || psd.rank != n) return fail("exact Gram rank differs from n at n = " + std::to_string(n));
    // For a PSD matrix the zero eigenvalue multiplicity is order minus rank.
    if (g.order() - psd.rank != n - 2) return fail("zero multiplicity differs from n-2 at n = " + std::to_string(n));
  }
  return {true, "n = 3..100 exact"};
}

Outcome twenty_eight_lines() {
  const Code c = seven_dim_28_lines();
  if (!validate_code(c, AngleSet::of_points({-1.0 / 3.0, 1.0 / 3.0})).pass) return fail("validation against +-1/3");
  const SymMatrix g = gram_of(c);
  RationalSymMatrix exact(g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i; j < g.order(); ++j) {
      const auto q = rationalize(g(i, j));
      if (!q) return fail("Gram entry is not a small fraction");
      exact.set(i, j, *q);
    }
  if (rank_of(exact) != 7)
    return fail("exact Gram rank is not 7");
  const Certificate cert = gerzon_certificate(c);
  if (!cert.pass || cert.lhs != 28.0 || cert.rhs != 28.0 || cert.witness["outer_rank"] != 28 ||
      cert.witness["rank"] != 7)
    return fail("gerzon certificate: " + to_json(cert).dump());
  return {true, "28 = C(8,2), outer-product rank 28"};
}

Outcome projection_identity() {
  double worst = 0.0;
  std::size_t cases = 0;
  for (std::size_t gi = 0; gi < 10; ++gi) {
    const double gamma = 0.05 + 0.09 * static_cast<double>(gi);
    for (std::size_t t = 1; t <= 10; ++t)
      for (std::size_t qi = 0; qi < 10; ++qi) {
        // Target projected angle q; the original p follows from inverting the formula.
        const double q = -0.9 + 0.2 * static_cast<double>(qi);
        const double c = static_cast<double>(t) * gamma * gamma / (1.0 + (static_cast<double>(t) - 1.0) * gamma);
        const double p = c + q * (1.0 - c);
        SymMatrix g(t + 2, gamma);
        for (std::size_t i = 0; i < t + 2; ++i) g.set(i, i, 1.0);
        g.set(t, t + 1, p);
        const Code code = embed_from_gram(g);
        const auto y = range(0, t);
        const auto x = range(t, t + 2);
        const Code proj = project_onto_complement(code, x, y);
        worst = std::max(worst, std::abs(proj.inner(0, 1) - predicted_projection_angle(gamma, t, p)));
        ++cases;
      }
  }
  if (worst > kProjectionTol) return fail("max deviation " + std::to_string(worst));
  for (long a = 2; a <= 20; ++a)
    for (std::size_t t = 1; t <= 50; ++t) {
      const Rational alpha(1, a);
      if (predicted_projection_angle(alpha, t, alpha) != Rational(1) / (Rational(static_cast<long>(t)) + Rational(a)))
        return fail("alpha -> 1/(t + 1/alpha) fails exactly");
    }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu triples, max deviation %.2e; exact special cases", cases, worst);
  return {true, buf};
}

Outcome concatenated_desk_scale() {
  std::size_t successes = 0;
  double slowest = 0.0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto start = std::chrono::steady_clock::now();
    const ConcatParams p = ConcatParams::make(30, 2, 3, 0.5, seed);
    bool ok = false;
    try {
      const ConcatResult res = concatenated_code(p);
      const Code& c = res.code;
      ok = c.size() == 4 * 435 && c.dim() == 33;
      const std::size_t per = res.report.copy_size;
      for (std::size_t i = 0; ok && i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) {
          const double ip = c.inner(i, j);
          if (i / per == j / per) {
            if (std::min(std::abs(ip - 0.5), std::abs(ip - 0.75)) > kWithinCopyTol) ok = false;
          } else if (ip > -p.beta_target) {
            ok = false;
          }
        }
    } catch (const RandomizedFailure&) {
      ok = false;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    slowest = std::max(slowest, secs);
    if (secs >= 60.0) ok = false;
    successes += ok;
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu/10 seeds succeeded, slowest %.2fs", successes, slowest);
  return {successes >= 9, buf};
}

Outcome rotation_tail() {
  const std::size_t n = 200, pairs = 10000;
  const double t = 0.2;
  RngStream rng(2024);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < pairs; ++i) {
    const Code uv = random_unit_vectors(2, n, rng);
    if (uv.inner(0, 1) >= t) ++hits;
  }
  const double bound = std::exp(-t * t * static_cast<double>(n) / 2.0);
  const double se = std::sqrt(bound * (1.0 - bound) / static_cast<double>(pairs));
  const double freq = static_cast<double>(hits) / static_cast<double>(pairs);
  char buf[128];
  std::snprintf(buf, sizeof buf, "frequency %.4f vs e^-4 + 3 SE = %.4f", freq, bound + 3.0 * se);
  return {freq < bound + 3.0 * se, buf};
}

Outcome trace_ratio() {
  RngStream rng(77);
  for (std::size_t trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + rng.below(49);
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m.set(i, j, 2.0 * rng.uniform() - 1.0);
    if (static_cast<double>(rank_of(m)) < trace_rank_lower_bound(m) - kTraceSlack)
      return fail("violated at trial " + std::to_string(trial));
  }
  for (std::size_t n = 1; n <= 20; ++n) {
    if (trace_rank_lower_bound(RationalSymMatrix::identity(n)) != Rational(static_cast<long>(n)) ||
        rank_of(RationalSymMatrix::identity(n)) != n)
      return fail("identity equality case");
    if (trace_rank_lower_bound(RationalSymMatrix::ones(n)) != 1 || rank_of(RationalSymMatrix::ones(n)) != 1)
      return fail("all-ones equality case");
  }
  return {true, "1000 matrices; I and J exact"};
}

SimpleGraph graph_with_min_degree(std::size_t n, std::size_t delta, RngStream& rng) {
  SimpleGraph g(n);
  for (std::size_t v = 0; v < n; ++v)
    while (g.degree(v) < delta) {
      const std::size_t u = rng.below(n);
      if (u != v) g.add_edge(u, v);
    }
  return g;
}

Outcome spectral_catalog() {
  for (const auto& c : catalog_lambda_checks(0, 50))
    if (!c.pass) return fail(c.name);
  std::size_t violations = 0, checks = 0;
  RngStream rng(99);
  for (std::size_t trial = 0; trial < 100; ++trial) {
    const std::size_t delta = 2 + trial % 3;
    const std::size_t radius = 2 + rng.below(10);
    const std::size_t n = 20 + rng.below(101);
    const SimpleGraph g = graph_with_min_degree(n, delta, rng);
    const auto ball = ball_subgraph_lambda(g, rng.below(n), radius);
    ++checks;
    if (ball.lambda1 < ball_lambda_bound(delta, radius) - kBallSlack) ++violations;
  }
  if (violations) return fail(std::to_string(violations) + " ball bound violations");
  return {true, "catalog thresholds met; " + std::to_string(checks) + " ball checks, 0 violations"};
}

Outcome ramsey_turan() {
  RngStream rng(31);
  for (std::size_t trial = 0; trial < 100; ++trial) {
    const std::size_t k = 2 + trial % 2;
    const std::size_t t = 2;
    const std::size_t m = k == 2 ? 1 + rng.below(3) : 1;
    std::size_t need = m;
    for (std::size_t i = 0; i < k * t; ++i) need *= k;
    const std::size_t n = need + 1 + rng.below(20);
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
    const auto pair = ramsey_pair(f, t, m);
    if (pair.y.size() != t || pair.x.size() != m || !is_monochromatic(f, pair))
      return fail("ramsey invariant broken at trial " + std::to_string(trial));
    for (std::size_t a : pair.x)
      for (std::size_t b : pair.y)
        if (a == b) return fail("X and Y overlap");
  }
  for (std::size_t trial = 0; trial < 100; ++trial) {
    const std::size_t n = 10 + rng.below(200);
    const double p = 0.02 + 0.3 * rng.uniform();
    SimpleGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng.uniform() < p) g.add_edge(i, j);
    const auto s = greedy_independent_set(g);
    if (static_cast<double>(s.size()) < static_cast<double>(n) / (static_cast<double>(g.max_degree()) + 1.0))
      return fail("greedy set below n/(max degree + 1)");
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (g.has_edge(s[i], s[j])) return fail("greedy set not independent");
  }
  return {true, "100 colourings, 100 graphs"};
}

Outcome multipartite_simplices() {
  double worst = 0.0;
  for (std::size_t r = 1; r <= 50; ++r) {
    const Code s = regular_simplex(r);
    std::vector<std::vector<std::size_t>> parts;
    for (std::size_t i = 0; i <= r; ++i) parts.push_back({i});
    const Certificate c = multipartite_certificate(s, parts, 0.5, 1.0 / static_cast<double>(r));
    const double size2 = static_cast<double>((r + 1) * (r + 1));
    if (c.rhs != size2) return fail("|C|^2 mismatch at r = " + std::to_string(r));
    worst = std::max(worst, std::abs(c.lhs - c.rhs));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "r = 1..50, max |lhs - |C|^2| = %.2e", worst);
  return {worst <= kMultipartiteTol, buf};
}

Outcome no_counterexample_sweep() {
  // Every n certifies the exact Gram (size and rank); every 25th n also embeds
  // the vectors and re-measures the angle.
  std::size_t grams = 0, codes = 0;
  double worst_ratio = 0.0;
  const auto check = [&](std::size_t size, std::size_t n) {
    const double ratio = static_cast<double>(size) / static_cast<double>(n);
    worst_ratio = std::max(worst_ratio, ratio);
    return ratio <= 1.93;
  };
  for (std::size_t n = 50; n <= 200; ++n) {
    for (std::size_t r : {3u, 4u, 5u}) {
      const auto g = odd_reciprocal_gram(n, r);
      const auto exact = exact_psd_rank(g);
      if (!exact.psd || exact.rank > n) return fail("odd-reciprocal Gram not realizable in R^" + std::to_string(n));
      ++grams;
      if (!check(g.order(), n)) return fail("size exceeds 1.93n at n = " + std::to_string(n));
    }
    if (n % 25 != 0) continue;
    const std::vector<Code> suite{odd_reciprocal_code(n, 3), odd_reciprocal_code(n, 4), regular_simplex(n)};
    for (const Code& c : suite) {
      const auto alpha = detect_equiangular(c);
      if (!alpha || std::abs(*alpha - 1.0 / 3.0) < 1e-9) return fail("unexpected angle at n = " + std::to_string(n));
      if (c.dim() > n) return fail("construction exceeds dimension");
      ++codes;
      if (!check(c.size(), n)) return fail("size exceeds 1.93n at n = " + std::to_string(n));
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu exact Grams, %zu embedded codes, max |C|/n = %.3f; asymptotic theorems not asserted",
                grams, codes, worst_ratio);
  return {true, buf};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double seconds;
    std::function<Outcome()> run;
  };
  // Time budgets in seconds; the concatenated code also checks 60s per seed.
  const std::vector<Criterion> criteria{
      {"lemmens-seidel family", 30, lemmens_seidel_family},
      {"28 lines in R^7", 1, twenty_eight_lines},
      {"projection identity", 10, projection_identity},
      {"concatenated code at desk scale", 600, concatenated_desk_scale},
      {"random rotation tail", 30, rotation_tail},
      {"trace ratio bound", 30, trace_ratio},
      {"spectral catalog and ball bound", 60, spectral_catalog},
      {"ramsey and turan procedures", 30, ramsey_turan},
      {"multipartite equality on simplices", 5, multipartite_simplices},
      {"no-counterexample sweep", 60, no_counterexample_sweep},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > criteria[i].seconds) {
      o.pass = false;
      o.detail += "; over the time budget";
    }
    std::printf("criterion %zu: %s  %s (%s) [%.2fs]\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
