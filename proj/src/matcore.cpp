#include "equicode/matcore.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

#include "equicode/code.hpp"

namespace equicode {

namespace {

double max_abs(const std::vector<double>& values) {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

double parse_double(std::string_view text) {
  // std::from_chars for double is available in libstdc++ 11.
  double value = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw Error(ErrorKind::ParseError, "bad number '" + std::string(text) + "'");
  return value;
}

}  // namespace

void Tolerance::validate() const {
  if (!(eig_zero > 0.0) || !(psd_slack > 0.0) || !(angle_tol > 0.0))
    throw Error(ErrorKind::InvalidParams, "tolerances must be strictly positive");
}

Tolerance Tolerance::parse(std::string_view text, Tolerance base) {
  if (text.find('=') == std::string_view::npos) {
    base.angle_tol = parse_double(text);
    base.validate();
    return base;
  }
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto term = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    const auto eq = term.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorKind::ParseError, "expected key=value in tolerance spec");
    const auto key = term.substr(0, eq);
    const double value = parse_double(term.substr(eq + 1));
    if (key == "eig_zero")
      base.eig_zero = value;
    else if (key == "psd_slack")
      base.psd_slack = value;
    else if (key == "angle_tol")
      base.angle_tol = value;
    else
      throw Error(ErrorKind::ParseError, "unknown tolerance key '" + std::string(key) + "'");
  }
  base.validate();
  return base;
}

Tolerance Tolerance::parse(std::string_view text) { return parse(text, Tolerance{}); }

Tolerance Tolerance::from_env() {
  const char* env = std::getenv("EQUICODE_TOL");
  if (env == nullptr || *env == '\0') return {};
  return parse(env);
}

Spectrum sym_eigen(const SymMatrix& m) {
  const std::size_t n = m.order();
  std::vector<double> a = m.data();
  for (double x : a)
    if (!std::isfinite(x)) throw Error(ErrorKind::InvalidMatrix, "matrix has non-finite entries");

  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

  const double norm = std::sqrt(std::inner_product(a.begin(), a.end(), a.begin(), 0.0));
  const double target = 1e-12 * norm;

  for (int sweep = 0; sweep < 100 && norm > 0.0; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * a[p * n + q] * a[p * n + q];
    if (std::sqrt(off) < target) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double pp = a[p * n + p];
        const double qq = a[q * n + q];
        const double theta = (qq - pp) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // A <- P^T A P on rows p and q; columns follow by symmetry.
        double* rp = a.data() + p * n;
        double* rq = a.data() + q * n;
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = rp[k];
          const double aqk = rq[k];
          rp[k] = c * apk - s * aqk;
          rq[k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          a[k * n + p] = rp[k];
          a[k * n + q] = rq[k];
        }
        a[p * n + p] = pp - t * apq;
        a[q * n + q] = qq + t * apq;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        // Eigenvectors are kept as rows of V^T.
        double* wp = v.data() + p * n;
        double* wq = v.data() + q * n;
        for (std::size_t k = 0; k < n; ++k) {
          const double vp = wp[k];
          const double vq = wq[k];
          wp[k] = c * vp - s * vq;
          wq[k] = s * vp + c * vq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a[i * n + i] > a[j * n + j]; });

  Spectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    out.eigenvalues[k] = a[src * n + src];
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors[k * n + i] = v[src * n + i];
  }

  for (std::size_t k = 0; k < n; ++k) {
    const auto vec = out.vector(k);
    for (std::size_t i = 0; i < n; ++i) {
      const double mv = dot(m.row(i), vec);
      out.residual = std::max(out.residual, std::abs(mv - out.eigenvalues[k] * vec[i]));
    }
  }
  return out;
}

std::size_t rank_of(const SymMatrix& m, const Tolerance& tol) {
  const Spectrum spec = sym_eigen(m);
  const double threshold = tol.eig_zero * std::max(1.0, max_abs(spec.eigenvalues));
  return static_cast<std::size_t>(
      std::count_if(spec.eigenvalues.begin(), spec.eigenvalues.end(), [&](double l) { return std::abs(l) > threshold; }));
}

std::size_t rank_of(const RationalSymMatrix& m) {
  const std::size_t n = m.order();
  std::vector<Rational> a = m.data();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && sgn(a[pivot * n + col]) == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != rank)
      for (std::size_t j = col; j < n; ++j) std::swap(a[pivot * n + j], a[rank * n + j]);
    const Rational inv = 1 / a[rank * n + col];
    Rational factor;
    for (std::size_t i = rank + 1; i < n; ++i) {
      if (sgn(a[i * n + col]) == 0) continue;
      factor = a[i * n + col] * inv;
      for (std::size_t j = col + 1; j < n; ++j)
        if (sgn(a[rank * n + j]) != 0) a[i * n + j] -= factor * a[rank * n + j];
      a[i * n + col] = 0;
    }
    ++rank;
  }
  return rank;
}

ExactPsdResult exact_psd_rank(const RationalSymMatrix& m) {
  const std::size_t n = m.order();
  std::vector<Rational> a = m.data();
  std::vector<std::size_t> active(n);
  std::iota(active.begin(), active.end(), std::size_t{0});

  ExactPsdResult out;
  Rational factor;
  while (!active.empty()) {
    auto it = std::find_if(active.begin(), active.end(), [&](std::size_t i) { return sgn(a[i * n + i]) > 0; });
    if (it == active.end()) {
      // No positive pivot left: PSD only if the remaining block is identically zero.
      for (std::size_t i : active) {
        if (sgn(a[i * n + i]) < 0) {
          out.failing_index = i;
          out.failing_value = a[i * n + i];
          return out;
        }
      }
      for (std::size_t i : active)
        for (std::size_t j : active)
          if (sgn(a[i * n + j]) != 0) {
            // 2x2 principal minor [[0, x], [x, 0]] is negative.
            out.failing_index = i;
            out.failing_value = -a[i * n + j] * a[i * n + j];
            return out;
          }
      break;
    }
    const std::size_t k = *it;
    active.erase(it);
    ++out.rank;
    const Rational inv = 1 / a[k * n + k];
    for (std::size_t i : active) {
      if (sgn(a[i * n + k]) == 0) continue;
      factor = a[i * n + k] * inv;
      for (std::size_t j : active) {
        if (j < i || sgn(a[k * n + j]) == 0) continue;
        a[i * n + j] -= factor * a[k * n + j];
        a[j * n + i] = a[i * n + j];
      }
      if (sgn(a[i * n + i]) < 0) {
        out.failing_index = i;
        out.failing_value = a[i * n + i];
        return out;
      }
    }
  }
  out.psd = true;
  return out;
}

Certificate is_psd(const SymMatrix& m, const Tolerance& tol) {
  const Spectrum spec = sym_eigen(m);
  const double lambda_min = spec.eigenvalues.back();
  const double scale = std::max(1.0, max_abs(spec.eigenvalues));
  return Certificate::compare("psd", "-lambda_min <= psd_slack * max(1, |lambda|_max)", -lambda_min,
                              tol.psd_slack * scale, 0.0,
                              {{"lambda_min", lambda_min}, {"lambda_max", spec.eigenvalues.front()}});
}

Certificate is_psd(const RationalSymMatrix& m) {
  const ExactPsdResult r = exact_psd_rank(m);
  nlohmann::json witness = {{"rank", r.rank}, {"exact", true}};
  if (r.failing_index) {
    witness["failing_index"] = *r.failing_index;
    witness["failing_pivot"] = r.failing_value.get_str();
  }
  Certificate c = Certificate::compare("psd", "all pivots of exact symmetric elimination >= 0",
                                       r.psd ? 0.0 : -r.failing_value.get_d(), 0.0, 0.0, std::move(witness));
  c.pass = r.psd;
  return c;
}

double trace_rank_lower_bound(const SymMatrix& m) {
  const double t2 = m.trace_of_square();
  if (t2 == 0.0) throw Error(ErrorKind::DegenerateInput, "trace(M^2) is zero");
  const double t = m.trace();
  return t * t / t2;
}

Rational trace_rank_lower_bound(const RationalSymMatrix& m) {
  const Rational t2 = m.trace_of_square();
  if (sgn(t2) == 0) throw Error(ErrorKind::DegenerateInput, "trace(M^2) is zero");
  const Rational t = m.trace();
  Rational out = t * t / t2;
  out.canonicalize();
  return out;
}

Code embed_from_gram(const SymMatrix& m, const Tolerance& tol) {
  const std::size_t n = m.order();
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(m(i, i) - 1.0) > tol.angle_tol)
      throw Error(ErrorKind::NotUnitDiagonal, "diagonal entry " + std::to_string(i) + " is not 1");

  const Spectrum spec = sym_eigen(m);
  const double scale = std::max(1.0, max_abs(spec.eigenvalues));
  if (spec.eigenvalues.back() < -tol.psd_slack * scale)
    throw Error(ErrorKind::NotRealizable, "Gram matrix is not positive semidefinite");
  const double threshold = tol.eig_zero * scale;
  std::size_t r = 0;
  while (r < n && spec.eigenvalues[r] > threshold) ++r;
  if (r == 0) throw Error(ErrorKind::NotRealizable, "Gram matrix has no positive spectrum");

  std::vector<double> coords(n * r);
  for (std::size_t k = 0; k < r; ++k) {
    const double root = std::sqrt(spec.eigenvalues[k]);
    const auto vec = spec.vector(k);
    for (std::size_t i = 0; i < n; ++i) coords[i * r + k] = vec[i] * root;
  }
  return Code::normalized(r, std::move(coords));
}

double quadratic_form(const SymMatrix& m, std::span<const double> v) {
  if (v.size() != m.order()) throw Error(ErrorKind::DimensionMismatch, "vector length differs from matrix order");
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * dot(m.row(i), v);
  return s;
}

Rational quadratic_form(const RationalSymMatrix& m, std::span<const Rational> v) {
  if (v.size() != m.order()) throw Error(ErrorKind::DimensionMismatch, "vector length differs from matrix order");
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational row = 0;
    for (std::size_t j = 0; j < v.size(); ++j) row += m(i, j) * v[j];
    s += v[i] * row;
  }
  s.canonicalize();
  return s;
}

TopEigenpair top_eigenpair(const SymMatrix& m, double shift) {
  const std::size_t n = m.order();
  if (n <= 500) {
    const Spectrum spec = sym_eigen(m);
    return {spec.eigenvalues.front(), std::vector<double>(spec.vector(0).begin(), spec.vector(0).end())};
  }
  // (M + shift I) is positive semidefinite for shift >= max degree of an
  // adjacency matrix, so its dominant eigenvalue is lambda_1 + shift.
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = 1.0 + 1e-3 * static_cast<double>(i % 7);
  auto normalize = [](std::vector<double>& u) {
    const double nu = std::sqrt(dot(u, u));
    for (double& e : u) e /= nu;
  };
  normalize(x);
  double value = 0.0;
  for (int iter = 0; iter < 200000; ++iter) {
    for (std::size_t i = 0; i < n; ++i) y[i] = dot(m.row(i), x) + shift * x[i];
    const double next = dot(x, y) - shift;
    normalize(y);
    std::swap(x, y);
    if (iter > 0 && std::abs(next - value) < 1e-12 * std::max(1.0, std::abs(next))) {
      value = next;
      break;
    }
    value = next;
  }
  return {value, x};
}

}  // namespace equicode
