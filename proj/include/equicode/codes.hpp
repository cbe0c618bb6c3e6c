#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "equicode/code.hpp"
#include "equicode/matcore.hpp"

namespace equicode {

struct Interval {
  double lo = -1.0;
  double hi = -1.0;
};

/// Allowed inner products: a union of closed intervals and isolated points in [-1, 1).
/// Points match within `tol`; intervals are inflated by `tol` at both ends.
class AngleSet {
 public:
  AngleSet() = default;
  AngleSet(std::vector<Interval> intervals, std::vector<double> points, double tol = 1e-9);

  static AngleSet of_points(std::vector<double> points, double tol = 1e-9) { return {{}, std::move(points), tol}; }
  static AngleSet of_interval(double lo, double hi, double tol = 1e-9) { return {{{lo, hi}}, {}, tol}; }

  /// Grammar: terms "interval:lo,hi" or "point:x" joined by '+'.
  static AngleSet parse(const std::string& text, double tol = 1e-9);
  std::string to_string() const;

  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  const std::vector<double>& points() const noexcept { return points_; }
  double tol() const noexcept { return tol_; }
  AngleSet with_tol(double tol) const { return {intervals_, points_, tol}; }

  bool is_finite() const noexcept { return intervals_.empty(); }
  /// Number of elements: points first, then intervals.
  std::size_t element_count() const noexcept { return points_.size() + intervals_.size(); }
  std::string element_label(std::size_t element) const;
  /// Representative value of an element (the point, or an interval's midpoint).
  double element_value(std::size_t element) const;
  double max_value() const;

  /// Element matched by `x`; the nearest point wins over intervals.
  std::optional<std::size_t> match(double x) const;
  /// Distance from x to the closest element (0 inside an interval).
  double distance(double x) const;

 private:
  std::vector<Interval> intervals_;
  std::vector<double> points_;
  double tol_ = 1e-9;
};

/// Parameters of the two-point set left after projecting away a positive t-clique.
struct AngleParams {
  double alpha = 0.0;
  std::size_t t = 1;
  double epsilon = 0.0;  // 1 / (t + 1/alpha)
  double sigma = 0.0;    // 2 alpha / (1 - alpha)

  static AngleParams make(double alpha, std::size_t t);
  /// epsilon and sigma recomputed from alpha and t reproduce the stored values exactly.
  bool consistent() const;
  double negative_value() const { return -sigma * (1.0 - epsilon) + epsilon; }
};

struct Violation {
  std::size_t i = 0;
  std::size_t j = 0;
  double inner_product = 0.0;
  double distance = 0.0;
};

struct ValidationReport {
  bool pass = true;
  std::vector<Violation> violations;
  std::vector<std::size_t> histogram;  // pair count per AngleSet element
};

SymMatrix gram_of(const Code& code);

/// rank_of(gram_of(code)), computed on the smaller of the Gram and the
/// dim x dim frame matrix (both share their nonzero spectrum).
std::size_t code_rank(const Code& code, const Tolerance& tol = {});

ValidationReport validate_code(const Code& code, const AngleSet& allowed);

/// The common magnitude alpha when every off-diagonal inner product is within
/// angle_tol of +alpha or -alpha.
std::optional<double> detect_equiangular(const Code& code, const Tolerance& tol = {});

/// Negates the vectors at the given indices. Throws InvalidIndex.
Code switch_vertices(const Code& code, std::span<const std::size_t> indices);

/// Inner product of two normalized projections onto the complement of a gamma-clique
/// of size t, given their original inner product p.
double predicted_projection_angle(double gamma, std::size_t t, double p);
Rational predicted_projection_angle(const Rational& gamma, std::size_t t, const Rational& p);

/// Normalized projections of the vectors at `x` onto the orthogonal complement
/// of span of the vectors at `y`. `y` must be a gamma-clique (pairwise inner
/// products within angle_tol of their mean).
Code project_onto_complement(const Code& code, std::span<const std::size_t> x, std::span<const std::size_t> y,
                             const Tolerance& tol = {});

/// Mean pairwise inner product of the clique at `y` (0 for a single vector);
/// throws NotAClique when some pair deviates by angle_tol or more.
double clique_gamma(const Code& code, std::span<const std::size_t> y, const Tolerance& tol = {});

AngleSet angle_set_after_projection(const AngleParams& params, double tol = 1e-9);

/// <v1, v2> for v1, v2 in the span of a gamma-clique Y of size t, from s_i = (<v_i, y>)_{y in Y}.
double span_inner_product(std::span<const double> s1, std::span<const double> s2, double gamma, std::size_t t);

}  // namespace equicode
