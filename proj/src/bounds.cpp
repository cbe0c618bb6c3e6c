#include "equicode/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "equicode/constructions.hpp"
#include "equicode/error.hpp"
#include "equicode/graphlab.hpp"

namespace equicode {

namespace {

double binomial_double(std::size_t n, std::size_t k) {
  const std::uint64_t exact = binomial(n, k);
  if (exact != std::numeric_limits<std::uint64_t>::max()) return static_cast<double>(exact);
  const double nn = static_cast<double>(n), kk = static_cast<double>(k);
  return std::round(std::exp(std::lgamma(nn + 1) - std::lgamma(kk + 1) - std::lgamma(nn - kk + 1)));
}

void require_l_code(const Code& code, const AngleSet& allowed) {
  const ValidationReport report = validate_code(code, allowed);
  if (!report.pass)
    throw Error(ErrorKind::NotAnLCode,
                std::to_string(report.violations.size()) + " pairs fall outside " + allowed.to_string());
}

double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

/// <Mv, v> for v = (xw,...,xw, yw,...,yw, zeta) on X u Y u {z}.
Certificate garbage_form(const char* name, const Code& code, std::span<const std::size_t> x,
                         std::span<const std::size_t> y, std::size_t z, double yw, double zeta, const Tolerance& tol,
                         nlohmann::json witness) {
  std::vector<std::size_t> idx(x.begin(), x.end());
  idx.insert(idx.end(), y.begin(), y.end());
  idx.push_back(z);
  std::vector<double> v;
  v.insert(v.end(), x.size(), 1.0 / static_cast<double>(x.size()));
  v.insert(v.end(), y.size(), yw);
  v.push_back(zeta);
  const SymMatrix m = gram_of(code.subset(idx));
  const double q = quadratic_form(m, v);
  const double norm2 = dot(v, v);
  witness["quadratic_form"] = q;
  witness["v_norm2"] = norm2;
  witness["y_weight"] = yw;
  witness["zeta"] = zeta;
  return Certificate::compare(name, "0 <= <Mv, v>", -q, 0.0, tol.psd_slack * std::max(1.0, norm2), std::move(witness));
}

void check_garbage_shape(const Code& code, std::span<const std::size_t> x, std::span<const std::size_t> y,
                         std::size_t z) {
  if (x.empty() || y.empty()) throw Error(ErrorKind::InvalidParams, "X and Y must be non-empty");
  std::vector<std::size_t> all(x.begin(), x.end());
  all.insert(all.end(), y.begin(), y.end());
  all.push_back(z);
  for (std::size_t i : all)
    if (i >= code.size()) throw Error(ErrorKind::InvalidIndex, "index " + std::to_string(i) + " out of range");
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw Error(ErrorKind::InvalidParams, "X, Y and z must be disjoint");
}

}  // namespace

std::optional<Rational> rationalize(double x, long max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  // Continued-fraction convergents h/k.
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(r);
    if (std::abs(a) > 1e12) break;
    const long ai = static_cast<long>(a);
    const long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    if (std::abs(x - static_cast<double>(h1) / static_cast<double>(k1)) <= 1e-12) {
      Rational q(h1, k1);
      q.canonicalize();
      return q;
    }
    const double frac = r - a;
    if (frac == 0.0) break;
    r = 1.0 / frac;
  }
  return std::nullopt;
}

Certificate negative_clique_certificate(const Code& code, double alpha, const Tolerance& tol) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw Error(ErrorKind::InvalidParams, "alpha must lie in (0, 1]");
  require_l_code(code, AngleSet::of_interval(-1.0, -alpha, tol.angle_tol));
  const double size = static_cast<double>(code.size());
  const double bound = 1.0 / alpha + 1.0;
  nlohmann::json witness = {{"size", code.size()}, {"bound", bound}};
  Certificate c = Certificate::compare("negative_clique", "|C| <= 1/alpha + 1", size, bound, 1e-9, witness);
  if (std::abs(bound - size) <= 1e-9 && code.size() >= 2) {
    // Equality forces the regular simplex: every inner product equals -1/(|C|-1).
    const double target = -1.0 / (size - 1.0);
    double dev = 0.0;
    for (std::size_t i = 0; i < code.size(); ++i)
      for (std::size_t j = i + 1; j < code.size(); ++j) dev = std::max(dev, std::abs(code.inner(i, j) - target));
    const bool simplex = dev <= tol.angle_tol;
    c.witness["equality"] = true;
    c.witness["simplex"] = simplex;
    c.witness["simplex_max_deviation"] = dev;
    c.pass = c.pass && simplex;
  } else {
    c.witness["equality"] = false;
  }
  return c;
}

Certificate gerzon_certificate(const Code& code, const Tolerance& tol) {
  const std::size_t m = code.size();
  if (m == 1) {
    return Certificate::compare("gerzon", "m <= C(r+1, 2)", 1.0, binomial_double(2, 2), 0.0,
                                {{"m", 1}, {"rank", 1}, {"outer_rank", 1}});
  }
  const auto alpha = detect_equiangular(code, tol);
  if (!alpha || *alpha >= 1.0 - tol.angle_tol) throw Error(ErrorKind::NotEquiangular, "code is not equiangular");

  const Code embedded = embed_from_gram(gram_of(code), tol);
  const std::size_t r = embedded.dim();

  // Frobenius inner products of the outer products x_i x_i^T, formed explicitly.
  std::vector<double> outer(m * r * r);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) outer[(i * r + a) * r + b] = embedded[i][a] * embedded[i][b];
  SymMatrix og(m);
  double identity_dev = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      const double f = dot(std::span<const double>(outer.data() + i * r * r, r * r),
                           std::span<const double>(outer.data() + j * r * r, r * r));
      og.set(i, j, f);
      const double ip = embedded.inner(i, j);
      identity_dev = std::max(identity_dev, std::abs(f - ip * ip));
    }
  const std::size_t float_rank = rank_of(og, tol);

  nlohmann::json witness = {{"m", m},
                            {"rank", r},
                            {"alpha", *alpha},
                            {"outer_rank", float_rank},
                            {"outer_identity_max_deviation", identity_dev}};
  std::size_t outer_rank = float_rank;
  if (auto q = rationalize(*alpha)) {
    // Equiangular: (1 - a^2) I + a^2 J exactly.
    const Rational a2 = *q * *q;
    RationalSymMatrix exact(m, a2);
    for (std::size_t i = 0; i < m; ++i) exact.set(i, i, 1);
    outer_rank = rank_of(exact);
    witness["outer_rank_exact"] = outer_rank;
    witness["alpha_exact"] = q->get_str();
  }
  const double bound = binomial_double(r + 1, 2);
  witness["bound"] = bound;
  Certificate c = Certificate::compare("gerzon", "m <= C(r+1, 2) with outer products independent",
                                       static_cast<double>(m), bound, 0.0, std::move(witness));
  c.pass = c.pass && outer_rank == m && float_rank == m;
  return c;
}

Certificate schnirelman_applied_certificate(const Code& code, const AngleParams& params, const Tolerance& tol) {
  const AngleSet allowed = angle_set_after_projection(params, tol.angle_tol);
  const LabelledGraph g = build_graph(code, allowed);
  const std::size_t neg = *g.negative_class();
  const SimpleGraph h = g.class_graph(neg);
  const double size = static_cast<double>(code.size());
  const double d = 2.0 * static_cast<double>(h.edge_count()) / size;
  const std::size_t rank = code_rank(code, tol);
  const double bound = (1.0 + params.sigma * params.sigma * d) * (static_cast<double>(rank) + 1.0);
  return Certificate::compare("schnirelman_applied", "|C| <= (1 + sigma^2 d)(rank + 1)", size, bound, 1e-9 * bound,
                              {{"size", code.size()},
                               {"average_negative_degree", d},
                               {"sigma", params.sigma},
                               {"rank", rank},
                               {"bound", bound}});
}

Certificate matching_full_rank_certificate(const Code& code, const AngleParams& params, const Tolerance& tol) {
  if (std::abs(params.alpha - 1.0 / 3.0) < 1e-12)
    throw Error(ErrorKind::ExcludedAngle, "alpha = 1/3 makes the matching blocks singular");
  const AngleSet allowed = angle_set_after_projection(params, tol.angle_tol);
  const LabelledGraph g = build_graph(code, allowed);
  const std::size_t neg = *g.negative_class();
  const SimpleGraph h = g.class_graph(neg);
  const NegativeStructure structure = negative_structure_report(h);
  if (!structure.is_matching) throw Error(ErrorKind::WrongStructure, "negative edges do not form a matching");

  const std::size_t n = code.size();
  nlohmann::json witness = {{"size", n}, {"matching_edges", h.edge_count()}};
  std::size_t n_rank;
  if (auto a = rationalize(params.alpha)) {
    // N = M - eps J = (1 - eps)(I - sigma A) exactly, A the matching adjacency.
    const Rational eps = 1 / (Rational(static_cast<unsigned long>(params.t)) + 1 / *a);
    const Rational sigma = 2 * *a / (1 - *a);
    RationalSymMatrix nm(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      nm.set(i, i, 1 - eps);
      for (std::size_t j : h.neighbours(i)) nm.set(i, j, -sigma * (1 - eps));
    }
    n_rank = rank_of(nm);
    witness["backend"] = "rational";
  } else {
    SymMatrix nm = gram_of(code);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) nm.set(i, j, nm(i, j) - params.epsilon);
    n_rank = rank_of(nm, tol);
    witness["backend"] = "float64";
  }
  const std::size_t m_rank = code_rank(code, tol);
  witness["rank_N"] = n_rank;
  witness["rank_M"] = m_rank;
  Certificate c = Certificate::compare("matching_full_rank", "rank(M - eps J) = |C| and |C| <= rank(M) + 1",
                                       static_cast<double>(n), static_cast<double>(m_rank + 1), 0.0,
                                       std::move(witness));
  c.pass = c.pass && n_rank == n;
  return c;
}

Certificate multipartite_certificate(const Code& code, std::span<const std::vector<std::size_t>> parts, double alpha,
                                     double beta, const Tolerance& tol) {
  if (!(beta > 0.0 && beta <= 1.0)) throw Error(ErrorKind::InvalidParams, "beta must lie in (0, 1]");
  if (parts.empty()) throw Error(ErrorKind::InvalidParams, "need at least one part");
  std::vector<std::size_t> all;
  std::vector<std::size_t> part_of(code.size(), parts.size());
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (std::size_t v : parts[p]) {
      if (v >= code.size()) throw Error(ErrorKind::InvalidIndex, "index " + std::to_string(v) + " out of range");
      if (part_of[v] != parts.size()) throw Error(ErrorKind::InvalidParams, "parts must be disjoint");
      part_of[v] = p;
      all.push_back(v);
    }
  for (const auto& part : parts)
    for (std::size_t i = 0; i < part.size(); ++i)
      for (std::size_t j = i + 1; j < part.size(); ++j)
        if (std::abs(code.inner(part[i], part[j]) - alpha) > tol.angle_tol)
          throw Error(ErrorKind::WrongStructure, "a part is not an alpha-clique");

  std::size_t a_edges = 0, b_edges = 0, b_cross = 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const double ip = code.inner(all[i], all[j]);
      if (ip >= alpha - tol.angle_tol) ++a_edges;
      if (ip <= -beta + tol.angle_tol) {
        ++b_edges;
        if (part_of[all[i]] != part_of[all[j]]) ++b_cross;
      }
    }
  const double size = static_cast<double>(all.size());
  const double lhs = 2.0 * static_cast<double>(b_edges) * (beta + 1.0) + 2.0 * static_cast<double>(a_edges) * (1.0 - alpha);
  const double rhs = size * size;

  // Part-count bound with the finite-t deficit delta of cross beta-edges.
  const double ell = static_cast<double>(parts.size());
  const double t = size / ell;
  const double cross_pairs = ell * (ell - 1.0) / 2.0 * t * t;
  const double delta = cross_pairs > 0.0 ? 1.0 - static_cast<double>(b_cross) / cross_pairs : 0.0;
  const double denom = beta - delta * (1.0 + beta);
  nlohmann::json witness = {{"A", a_edges}, {"B", b_edges}, {"size", all.size()}, {"parts", parts.size()},
                            {"mean_part_size", t}, {"cross_deficit", delta}};
  if (denom > 0.0)
    witness["part_count_bound"] = (beta + alpha + (1.0 - alpha) / t - delta * (1.0 + beta)) / denom;
  else
    witness["part_count_bound"] = nullptr;
  witness["asymptotic_part_bound"] = 1.0 + alpha / beta;
  return Certificate::compare("multipartite", "2B(beta+1) + 2A(1-alpha) <= |C|^2", lhs, rhs, 1e-10 * rhs,
                              std::move(witness));
}

Certificate dgs_bound_check(const Code& code, const AngleSet& allowed, const Tolerance& tol) {
  if (!allowed.is_finite()) throw Error(ErrorKind::NotFinite, "angle set contains an interval");
  require_l_code(code, allowed);
  const std::size_t rank = code_rank(code, tol);
  const std::size_t k = allowed.points().size();
  const double bound = binomial_double(rank + k, k);
  return Certificate::compare("dgs", "|C| <= C(rank + |L|, |L|)", static_cast<double>(code.size()), bound, 0.0,
                              {{"size", code.size()}, {"rank", rank}, {"L_size", k}, {"bound", bound}});
}

Certificate beta_energy_check(const Code& code, double alpha, double beta, std::size_t x, const Tolerance& tol) {
  if (x >= code.size()) throw Error(ErrorKind::InvalidIndex, "vertex out of range");
  require_l_code(code, AngleSet({{-1.0, -beta}}, {alpha}, tol.angle_tol));
  std::vector<std::size_t> idx;
  std::vector<double> betas;
  for (std::size_t j = 0; j < code.size(); ++j)
    if (j != x && code.inner(x, j) <= -beta + tol.angle_tol) {
      idx.push_back(j);
      betas.push_back(-code.inner(x, j));
    }
  double s = 0.0;
  for (double b : betas) s += b * b;
  const double alpha_n = alpha * static_cast<double>(betas.size());

  // w = (beta_1, ..., beta_N, 1) on N_beta(x) u {x}.
  idx.push_back(x);
  std::vector<double> w(betas);
  w.push_back(1.0);
  const double mww = quadratic_form(gram_of(code.subset(idx)), w);
  return Certificate::compare("beta_energy", "sum beta_i^2 <= 1 + alpha N sum beta_i^2", s, 1.0 + alpha_n * s,
                              tol.psd_slack * std::max(1.0, s),
                              {{"vertex", x},
                               {"N", betas.size()},
                               {"sum_beta_sq", s},
                               {"alpha_N", alpha_n},
                               {"Mww", mww},
                               {"mean_beta", mean(betas)}});
}

Certificate one_angle_garbage_witness(const Code& code, std::span<const std::size_t> x, std::span<const std::size_t> y,
                                      std::size_t z, double alpha, double beta, const Tolerance& tol) {
  check_garbage_shape(code, x, y, z);
  std::vector<double> xz;
  for (std::size_t i : x) xz.push_back(-code.inner(i, z));
  const double beta_z = mean(xz);
  const double ny = static_cast<double>(y.size());
  const double den = alpha - alpha * alpha + (1.0 - alpha) / ny;
  const double yw = -(alpha * (1.0 + beta_z) / ny) / den;
  const double zeta = beta_z - yw * ny * alpha;
  const double nx = static_cast<double>(x.size());
  const double upper = (1.0 - alpha) / nx + alpha - beta_z * beta_z - alpha * alpha * (1.0 + beta_z) * (1.0 + beta_z) / den;
  return garbage_form("one_angle_garbage", code, x, y, z, yw, zeta, tol,
                      {{"X", x.size()},
                       {"Y", y.size()},
                       {"beta_z", beta_z},
                       {"form_upper_bound", upper},
                       {"Y_exceeds_1_over_alpha_sq", ny > 1.0 / (alpha * alpha)},
                       {"X_below_1_over_beta_sq", nx < 1.0 / (beta * beta)}});
}

Certificate garbage_witness(const Code& code, std::span<const std::size_t> x, std::span<const std::size_t> y,
                            std::size_t z, double alpha, double gamma, const Tolerance& tol) {
  check_garbage_shape(code, x, y, z);
  std::vector<double> xy, xz;
  for (std::size_t i : x) {
    xz.push_back(code.inner(i, z));
    for (std::size_t j : y) xy.push_back(code.inner(i, j));
  }
  const double alpha_y = mean(xy);
  const double gamma_z = mean(xz);
  const double ny = static_cast<double>(y.size());
  const double den = alpha - alpha * alpha + (1.0 - alpha) / ny;
  const double yw = -((alpha_y - alpha * gamma_z) / ny) / den;
  const double zeta = -(gamma_z + yw * ny * alpha);
  const double nx = static_cast<double>(x.size());
  const double gap = gamma - alpha;
  return garbage_form("garbage", code, x, y, z, yw, zeta, tol,
                      {{"X", x.size()},
                       {"Y", y.size()},
                       {"alpha_Y", alpha_y},
                       {"gamma_z", gamma_z},
                       {"Y_exceeds_threshold", ny > 4.0 / (alpha * gap * gap)},
                       {"X_below_1_over_gap_sq", nx < 1.0 / (gap * gap)}});
}

BoundTable bound_table(std::size_t n, std::size_t k, double alpha, double beta) {
  if (n < 1) throw Error(ErrorKind::InvalidParams, "n must be positive");
  BoundTable t;
  t.n = n;
  t.k = k;
  t.alpha = alpha;
  t.beta = beta;
  const double nd = static_cast<double>(n);
  t.gerzon = binomial_double(n + 1, 2);
  t.dgs = binomial_double(n + k, k);
  t.neg_clique = beta > 0.0 ? 1.0 / beta + 1.0 : std::numeric_limits<double>::infinity();
  t.equiangular_third = 2.0 * nd - 2.0;
  t.equiangular_general = 1.93 * nd;
  t.projected_general = 1.92 * nd;
  const double ratio = beta > 0.0 ? alpha / beta : std::numeric_limits<double>::infinity();
  t.one_angle_spherical = 2.0 * (1.0 + std::max(ratio, 0.0)) * nd;
  if (k >= 1)
    t.multi_angle_leading = std::pow(2.0, static_cast<double>(k)) * std::tgamma(static_cast<double>(k)) *
                            (1.0 + ratio) * std::pow(nd, static_cast<double>(k));
  return t;
}

nlohmann::json to_json(const BoundTable& t) {
  return {{"n", t.n},
          {"k", t.k},
          {"alpha", t.alpha},
          {"beta", t.beta},
          {"gerzon", t.gerzon},
          {"dgs", t.dgs},
          {"neg_clique", t.neg_clique},
          {"targets",
           {{"equiangular_alpha_third", t.equiangular_third},
            {"equiangular_general", t.equiangular_general},
            {"projected_general", t.projected_general},
            {"one_angle_spherical", t.one_angle_spherical},
            {"multi_angle_leading", t.multi_angle_leading}}}};
}

}  // namespace equicode
