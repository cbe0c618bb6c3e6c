#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "equicode/certificate.hpp"
#include "equicode/code.hpp"
#include "equicode/codes.hpp"
#include "equicode/matcore.hpp"
#include "equicode/rng.hpp"

namespace equicode {

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class SimpleGraph {
 public:
  explicit SimpleGraph(std::size_t n = 0) : adj_(n) {}
  static SimpleGraph from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges);

  /// Ignores loops and repeated edges.
  void add_edge(std::size_t u, std::size_t v);

  std::size_t size() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }
  std::size_t degree(std::size_t v) const { return adj_[v].size(); }
  std::size_t min_degree() const;
  std::size_t max_degree() const;
  bool has_edge(std::size_t u, std::size_t v) const;
  const std::vector<std::size_t>& neighbours(std::size_t v) const { return adj_[v]; }

  SymMatrix adjacency() const;
  /// Subgraph induced on `vertices`, relabelled 0..|vertices|-1 in the given order.
  SimpleGraph induced(std::span<const std::size_t> vertices) const;

 private:
  std::vector<std::vector<std::size_t>> adj_;
  std::size_t edges_ = 0;
};

/// Largest adjacency eigenvalue (0 for an edgeless graph).
double spectral_radius(const SimpleGraph& g);

/// The complete graph of a code with edges labelled by inner products and
/// classed by the matching element of an AngleSet.
class LabelledGraph {
 public:
  std::size_t size() const noexcept { return size_; }
  double label(std::size_t i, std::size_t j) const { return labels_[i * size_ + j]; }
  /// AngleSet element index of the edge ij (i != j).
  std::size_t class_of(std::size_t i, std::size_t j) const { return classes_[i * size_ + j]; }
  std::size_t class_count() const noexcept { return allowed_.element_count(); }
  const AngleSet& angle_set() const noexcept { return allowed_; }
  /// The element with the smallest value, when that value is negative.
  std::optional<std::size_t> negative_class() const;
  /// The edges of one class as a simple graph.
  SimpleGraph class_graph(std::size_t cls) const;

  friend LabelledGraph build_graph(const Code& code, const AngleSet& allowed);

 private:
  std::size_t size_ = 0;
  std::vector<double> labels_;
  std::vector<std::size_t> classes_;
  AngleSet allowed_;
};

/// Throws NotAnLCode when the code fails validation against `allowed`.
LabelledGraph build_graph(const Code& code, const AngleSet& allowed);

struct DegreeStats {
  std::vector<std::vector<std::size_t>> degrees;  // [class][vertex]
  std::vector<std::size_t> max_degree;            // per class
  std::vector<double> average_degree;             // per class
  std::vector<std::vector<std::size_t>> histogram;  // [class][degree] -> vertex count
};
DegreeStats gamma_degree_stats(const LabelledGraph& g);

/// Greedy independent set: scan vertices by ascending degree (ties by index),
/// keep a vertex and delete its neighbourhood. Size >= n / (max degree + 1).
std::vector<std::size_t> greedy_independent_set(const SimpleGraph& g);
std::vector<std::size_t> greedy_independent_set(const LabelledGraph& g, std::size_t cls);

/// Edge k-colouring of K_n; colour(i, j) in [0, k).
struct EdgeColoring {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::uint32_t> colors;  // row-major n x n, symmetric

  static EdgeColoring of_graph(const LabelledGraph& g);
  std::uint32_t color(std::size_t i, std::size_t j) const { return colors[i * n + j]; }
};

/// (X, Y) with every edge inside X u Y that touches Y coloured `color`.
struct MonochromaticPair {
  std::vector<std::size_t> x;
  std::vector<std::size_t> y;
  std::uint32_t color = 0;
  /// |X_i| after each of the kt majority steps.
  std::vector<std::size_t> trace;
};

/// Iterative majority-colour procedure: v_1 = 0, v_{i+1} = smallest vertex of
/// X_i, majority ties to the lowest colour, then the lowest colour used at
/// least t times. Throws TooSmall unless n > k^{kt} m.
MonochromaticPair ramsey_pair(const EdgeColoring& f, std::size_t t, std::size_t m);

bool is_monochromatic(const EdgeColoring& f, const MonochromaticPair& pair);

struct ComponentInfo {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  bool is_tree = false;
};

struct NegativeStructure {
  bool is_matching = false;
  std::vector<ComponentInfo> components;  // components with at least one edge
  std::size_t max_degree = 0;
};
NegativeStructure negative_structure_report(const SimpleGraph& negatives);
/// Throws InvalidParams when the AngleSet has no negative element.
NegativeStructure negative_structure_report(const LabelledGraph& g);

struct BallSubgraph {
  std::vector<std::size_t> vertices;  // BFS order from v0
  SimpleGraph graph;
  double lambda1 = 0.0;
};
BallSubgraph ball_subgraph_lambda(const SimpleGraph& g, std::size_t v0, std::size_t radius);
/// 2 (1 - 1/(k+1)) sqrt(delta - 1).
double ball_lambda_bound(std::size_t min_degree, std::size_t radius);

/// Catalog of connected small graphs with spectral radius thresholds. Random
/// witnesses (trees, unicyclic graphs, degree-4 graphs) are drawn from `seed`.
std::vector<Certificate> catalog_lambda_checks(std::uint64_t seed = 0, std::size_t random_witnesses = 20);

/// Exact form 0 <= 1 - eps + eps <Jx,x> - sigma (1-eps) lambda_1(H) for the top
/// unit eigenvector x of the negative-edge graph H. Throws NotAnLCode.
Certificate lambda_inequality_check(const Code& code, const AngleParams& params, const Tolerance& tol = {});

struct Bucket {
  std::optional<std::uint32_t> mask;  // bit i set when Y[i] is in T (only for |Y| <= 24)
  std::size_t t_size = 0;             // |T|
  std::vector<std::size_t> members;
};

struct ReductionOutcome {
  double alpha = 0.0;
  std::size_t t = 0;
  std::vector<std::size_t> y;
  std::vector<std::size_t> switched;
  std::vector<Bucket> buckets;  // after switching; never includes T = Y
  std::vector<std::size_t> s_y;
  std::optional<Code> projected;  // absent when S_Y is empty
  bool clique_from_ramsey = false;
  std::size_t total = 0;          // |C|
  std::size_t accounted = 0;      // |S_Y| + sum |S_T| + |Y|
  /// Buckets with t/2 <= |T| < t and |T| > 2/alpha^2 all have |S_T| < 2/alpha^2.
  std::optional<bool> garbage_bound_holds;
};

/// Positive t-clique of a {-alpha, alpha}-code (indices sorted), or nullopt.
/// Tries ramsey_pair first and falls back to depth-first search within `node_budget`.
std::optional<std::vector<std::size_t>> find_positive_clique(const LabelledGraph& g, std::size_t positive_class,
                                                             std::size_t t, double alpha, bool* from_ramsey = nullptr,
                                                             std::size_t node_budget = 2'000'000);

/// Positive clique, bucketing by positive attachment, switching of small-|T|
/// vertices and projection of S_Y. Throws NotEquiangular, NoClique, ZeroProjection.
ReductionOutcome reduction_pipeline(const Code& code, std::size_t t, const Tolerance& tol = {});

}  // namespace equicode
