#include "equicode/codes.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace equicode {

namespace {

double parse_number(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty())
    throw Error(ErrorKind::ParseError, "bad number '" + std::string(text) + "' in angle set");
  return value;
}

std::string format_number(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

AngleSet::AngleSet(std::vector<Interval> intervals, std::vector<double> points, double tol)
    : intervals_(std::move(intervals)), points_(std::move(points)), tol_(tol) {
  if (!(tol_ > 0.0)) throw Error(ErrorKind::InvalidParams, "angle tolerance must be positive");
  for (const Interval& iv : intervals_)
    if (!(iv.lo <= iv.hi) || iv.lo < -1.0 || iv.hi >= 1.0)
      throw Error(ErrorKind::InvalidParams, "interval must be non-empty and lie in [-1, 1)");
  for (double p : points_)
    if (!(p >= -1.0 && p < 1.0)) throw Error(ErrorKind::InvalidParams, "point must lie in [-1, 1)");
}

AngleSet AngleSet::parse(const std::string& text, double tol) {
  std::vector<Interval> intervals;
  std::vector<double> points;
  std::string_view rest = text;
  if (rest.empty()) throw Error(ErrorKind::ParseError, "empty angle set");
  while (!rest.empty()) {
    const auto plus = rest.find('+');
    const std::string_view term = rest.substr(0, plus);
    rest = plus == std::string_view::npos ? std::string_view{} : rest.substr(plus + 1);
    if (term.starts_with("point:")) {
      points.push_back(parse_number(term.substr(6)));
    } else if (term.starts_with("interval:")) {
      const auto body = term.substr(9);
      const auto comma = body.find(',');
      if (comma == std::string_view::npos) throw Error(ErrorKind::ParseError, "interval needs 'lo,hi'");
      intervals.push_back({parse_number(body.substr(0, comma)), parse_number(body.substr(comma + 1))});
    } else {
      throw Error(ErrorKind::ParseError, "unknown angle set term '" + std::string(term) + "'");
    }
  }
  try {
    return AngleSet(std::move(intervals), std::move(points), tol);
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

std::string AngleSet::to_string() const {
  std::string out;
  for (std::size_t e = 0; e < element_count(); ++e) {
    if (!out.empty()) out += '+';
    out += element_label(e);
  }
  return out;
}

std::string AngleSet::element_label(std::size_t element) const {
  if (element < points_.size()) return "point:" + format_number(points_[element]);
  const Interval& iv = intervals_.at(element - points_.size());
  return "interval:" + format_number(iv.lo) + "," + format_number(iv.hi);
}

double AngleSet::element_value(std::size_t element) const {
  if (element < points_.size()) return points_[element];
  const Interval& iv = intervals_.at(element - points_.size());
  return 0.5 * (iv.lo + iv.hi);
}

double AngleSet::max_value() const {
  double m = -std::numeric_limits<double>::infinity();
  for (double p : points_) m = std::max(m, p);
  for (const Interval& iv : intervals_) m = std::max(m, iv.hi);
  return m;
}

std::optional<std::size_t> AngleSet::match(double x) const {
  std::optional<std::size_t> best;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < points_.size(); ++k) {
    const double d = std::abs(x - points_[k]);
    if (d <= tol_ && d < best_dist) {
      best = k;
      best_dist = d;
    }
  }
  if (best) return best;
  for (std::size_t k = 0; k < intervals_.size(); ++k)
    if (x >= intervals_[k].lo - tol_ && x <= intervals_[k].hi + tol_) return points_.size() + k;
  return std::nullopt;
}

double AngleSet::distance(double x) const {
  double d = std::numeric_limits<double>::infinity();
  for (double p : points_) d = std::min(d, std::abs(x - p));
  for (const Interval& iv : intervals_) {
    if (x < iv.lo)
      d = std::min(d, iv.lo - x);
    else if (x > iv.hi)
      d = std::min(d, x - iv.hi);
    else
      d = 0.0;
  }
  return d;
}

AngleParams AngleParams::make(double alpha, std::size_t t) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorKind::InvalidParams, "alpha must lie in (0, 1)");
  if (t < 1) throw Error(ErrorKind::InvalidParams, "t must be positive");
  AngleParams p;
  p.alpha = alpha;
  p.t = t;
  p.epsilon = 1.0 / (static_cast<double>(t) + 1.0 / alpha);
  p.sigma = 2.0 * alpha / (1.0 - alpha);
  return p;
}

bool AngleParams::consistent() const {
  if (!(alpha > 0.0 && alpha < 1.0) || t < 1) return false;
  const AngleParams fresh = make(alpha, t);
  return fresh.epsilon == epsilon && fresh.sigma == sigma;
}

SymMatrix gram_of(const Code& code) {
  SymMatrix g(code.size());
  for (std::size_t i = 0; i < code.size(); ++i)
    for (std::size_t j = i; j < code.size(); ++j) g.set(i, j, code.inner(i, j));
  return g;
}

std::size_t code_rank(const Code& code, const Tolerance& tol) {
  if (code.size() <= code.dim()) return rank_of(gram_of(code), tol);
  const std::size_t n = code.dim();
  SymMatrix frame(n, 0.0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      double s = 0.0;
      for (std::size_t i = 0; i < code.size(); ++i) s += code[i][a] * code[i][b];
      frame.set(a, b, s);
    }
  return rank_of(frame, tol);
}

ValidationReport validate_code(const Code& code, const AngleSet& allowed) {
  ValidationReport report;
  report.histogram.assign(allowed.element_count(), 0);
  const bool distinct_lines_required = allowed.max_value() < 1.0;
  for (std::size_t i = 0; i < code.size(); ++i) {
    for (std::size_t j = i + 1; j < code.size(); ++j) {
      const double ip = code.inner(i, j);
      const bool duplicate = distinct_lines_required && ip >= 1.0 - allowed.tol();
      const auto element = duplicate ? std::nullopt : allowed.match(ip);
      if (element) {
        ++report.histogram[*element];
      } else {
        report.violations.push_back({i, j, ip, duplicate ? std::max(allowed.distance(ip), allowed.tol())
                                                         : allowed.distance(ip)});
      }
    }
  }
  report.pass = report.violations.empty();
  return report;
}

std::optional<double> detect_equiangular(const Code& code, const Tolerance& tol) {
  if (code.size() < 2) throw Error(ErrorKind::InvalidParams, "equiangularity needs at least two vectors");
  const std::size_t m = code.size();
  std::vector<double> magnitudes;
  magnitudes.reserve(m * (m - 1) / 2);
  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      magnitudes.push_back(std::abs(code.inner(i, j)));
      sum += magnitudes.back();
    }
  const double alpha = sum / static_cast<double>(magnitudes.size());
  for (double g : magnitudes)
    if (std::abs(g - alpha) > tol.angle_tol) return std::nullopt;
  return alpha;
}

Code switch_vertices(const Code& code, std::span<const std::size_t> indices) {
  std::vector<double> coords = code.coordinates();
  std::vector<bool> flip(code.size(), false);
  for (std::size_t i : indices) {
    if (i >= code.size()) throw Error(ErrorKind::InvalidIndex, "index " + std::to_string(i) + " out of range");
    flip[i] = true;
  }
  for (std::size_t i = 0; i < code.size(); ++i)
    if (flip[i])
      for (std::size_t k = 0; k < code.dim(); ++k) coords[i * code.dim() + k] = -coords[i * code.dim() + k];
  return Code(code.dim(), std::move(coords), 1.0);
}

namespace {

template <class Scalar>
Scalar projection_angle(const Scalar& gamma, std::size_t t, const Scalar& p) {
  if (!(gamma > -1 && gamma < 1)) throw Error(ErrorKind::InvalidParams, "gamma must lie in (-1, 1)");
  if (t < 1) throw Error(ErrorKind::InvalidParams, "clique size must be positive");
  if (gamma < 0 && t != 1) throw Error(ErrorKind::InvalidParams, "a negative clique must have size 1");
  if (!(p >= -1 && p <= 1)) throw Error(ErrorKind::InvalidParams, "inner product must lie in [-1, 1]");
  const Scalar one(1);
  const Scalar size(static_cast<long>(t));
  Scalar value = (p - gamma) / (one - gamma) + gamma * (one - p) / ((one + gamma * size) * (one - gamma));
  return value;
}

}  // namespace

double predicted_projection_angle(double gamma, std::size_t t, double p) { return projection_angle(gamma, t, p); }

Rational predicted_projection_angle(const Rational& gamma, std::size_t t, const Rational& p) {
  Rational value = projection_angle(gamma, t, p);
  value.canonicalize();
  return value;
}

double clique_gamma(const Code& code, std::span<const std::size_t> y, const Tolerance& tol) {
  if (y.empty()) throw Error(ErrorKind::NotAClique, "empty clique");
  for (std::size_t i : y)
    if (i >= code.size()) throw Error(ErrorKind::InvalidIndex, "index " + std::to_string(i) + " out of range");
  if (y.size() == 1) return 0.0;
  std::vector<double> values;
  double sum = 0.0;
  for (std::size_t a = 0; a < y.size(); ++a)
    for (std::size_t b = a + 1; b < y.size(); ++b) {
      values.push_back(code.inner(y[a], y[b]));
      sum += values.back();
    }
  const double gamma = sum / static_cast<double>(values.size());
  for (double v : values)
    if (std::abs(v - gamma) >= tol.angle_tol) throw Error(ErrorKind::NotAClique, "pairwise inner products differ");
  if (!(gamma > -1.0 && gamma < 1.0)) throw Error(ErrorKind::NotAClique, "clique inner product outside (-1, 1)");
  return gamma;
}

Code project_onto_complement(const Code& code, std::span<const std::size_t> x, std::span<const std::size_t> y,
                             const Tolerance& tol) {
  clique_gamma(code, y, tol);
  std::vector<bool> in_y(code.size(), false);
  for (std::size_t i : y) in_y[i] = true;
  for (std::size_t i : x) {
    if (i >= code.size()) throw Error(ErrorKind::InvalidIndex, "index " + std::to_string(i) + " out of range");
    if (in_y[i]) throw Error(ErrorKind::InvalidParams, "projected set and clique must be disjoint");
  }
  if (x.empty()) throw Error(ErrorKind::InvalidParams, "nothing to project");

  const std::size_t n = code.dim();
  // Orthonormal basis of span(Y) by modified Gram-Schmidt with one re-orthogonalization pass.
  std::vector<std::vector<double>> basis;
  for (std::size_t i : y) {
    std::vector<double> u(code[i].begin(), code[i].end());
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : basis) {
        const double c = dot(u, q);
        for (std::size_t k = 0; k < n; ++k) u[k] -= c * q[k];
      }
    const double norm = std::sqrt(dot(u, u));
    if (norm < 1e-10) throw Error(ErrorKind::NotAClique, "clique vectors are linearly dependent");
    for (double& e : u) e /= norm;
    basis.push_back(std::move(u));
  }

  std::vector<double> coords;
  coords.reserve(x.size() * n);
  for (std::size_t i : x) {
    std::vector<double> u(code[i].begin(), code[i].end());
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : basis) {
        const double c = dot(u, q);
        for (std::size_t k = 0; k < n; ++k) u[k] -= c * q[k];
      }
    const double norm = std::sqrt(dot(u, u));
    if (norm < 1e-10)
      throw Error(ErrorKind::ZeroProjection, "vector " + std::to_string(i) + " lies in the span of the clique");
    for (double& e : u) e /= norm;
    coords.insert(coords.end(), u.begin(), u.end());
  }
  return Code(n, std::move(coords));
}

AngleSet angle_set_after_projection(const AngleParams& params, double tol) {
  if (!params.consistent()) throw Error(ErrorKind::InvalidParams, "inconsistent angle parameters");
  return AngleSet::of_points({params.negative_value(), params.epsilon}, tol);
}

double span_inner_product(std::span<const double> s1, std::span<const double> s2, double gamma, std::size_t t) {
  if (s1.size() != t || s2.size() != t) throw Error(ErrorKind::DimensionMismatch, "inner-product vectors need length t");
  if (!(gamma >= -1.0 && gamma < 1.0)) throw Error(ErrorKind::InvalidParams, "gamma must lie in [-1, 1)");
  const double denom = 1.0 + gamma * (static_cast<double>(t) - 1.0);
  if (std::abs(denom) < 1e-15) throw Error(ErrorKind::SingularGram, "clique Gram matrix is singular");
  double sum1 = 0.0, sum2 = 0.0;
  for (std::size_t k = 0; k < t; ++k) {
    sum1 += s1[k];
    sum2 += s2[k];
  }
  return (dot(s1, s2) - gamma / denom * sum1 * sum2) / (1.0 - gamma);
}

}  // namespace equicode
