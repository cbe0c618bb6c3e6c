#include "equicode/graphlab.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "equicode/error.hpp"

namespace equicode {

SimpleGraph SimpleGraph::from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges) {
  SimpleGraph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= size() || v >= size()) throw Error(ErrorKind::InvalidIndex, "edge endpoint out of range");
  if (u == v || has_edge(u, v)) return;
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++edges_;
}

bool SimpleGraph::has_edge(std::size_t u, std::size_t v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::size_t SimpleGraph::min_degree() const {
  std::size_t m = std::numeric_limits<std::size_t>::max();
  for (const auto& a : adj_) m = std::min(m, a.size());
  return adj_.empty() ? 0 : m;
}

std::size_t SimpleGraph::max_degree() const {
  std::size_t m = 0;
  for (const auto& a : adj_) m = std::max(m, a.size());
  return m;
}

SymMatrix SimpleGraph::adjacency() const {
  SymMatrix a(size(), 0.0);
  for (std::size_t u = 0; u < size(); ++u)
    for (std::size_t v : adj_[u]) a.set(u, v, 1.0);
  return a;
}

SimpleGraph SimpleGraph::induced(std::span<const std::size_t> vertices) const {
  std::vector<std::size_t> pos(size(), std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = i;
  SimpleGraph h(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t w : adj_[vertices[i]])
      if (pos[w] != std::numeric_limits<std::size_t>::max() && pos[w] > i) h.add_edge(i, pos[w]);
  return h;
}

double spectral_radius(const SimpleGraph& g) {
  if (g.edge_count() == 0) return 0.0;
  return top_eigenpair(g.adjacency(), static_cast<double>(g.max_degree())).value;
}

std::optional<std::size_t> LabelledGraph::negative_class() const {
  if (allowed_.element_count() == 0) return std::nullopt;
  std::size_t best = 0;
  for (std::size_t e = 1; e < allowed_.element_count(); ++e)
    if (allowed_.element_value(e) < allowed_.element_value(best)) best = e;
  if (allowed_.element_value(best) < 0.0) return best;
  return std::nullopt;
}

SimpleGraph LabelledGraph::class_graph(std::size_t cls) const {
  SimpleGraph g(size_);
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = i + 1; j < size_; ++j)
      if (class_of(i, j) == cls) g.add_edge(i, j);
  return g;
}

LabelledGraph build_graph(const Code& code, const AngleSet& allowed) {
  const ValidationReport report = validate_code(code, allowed);
  if (!report.pass)
    throw Error(ErrorKind::NotAnLCode,
                std::to_string(report.violations.size()) + " pairs fall outside " + allowed.to_string());
  LabelledGraph g;
  g.size_ = code.size();
  g.allowed_ = allowed;
  g.labels_.assign(g.size_ * g.size_, 1.0);
  g.classes_.assign(g.size_ * g.size_, 0);
  for (std::size_t i = 0; i < g.size_; ++i)
    for (std::size_t j = i + 1; j < g.size_; ++j) {
      const double ip = code.inner(i, j);
      const std::size_t cls = *allowed.match(ip);
      g.labels_[i * g.size_ + j] = g.labels_[j * g.size_ + i] = ip;
      g.classes_[i * g.size_ + j] = g.classes_[j * g.size_ + i] = cls;
    }
  return g;
}

DegreeStats gamma_degree_stats(const LabelledGraph& g) {
  const std::size_t classes = g.class_count();
  const std::size_t n = g.size();
  DegreeStats s;
  s.degrees.assign(classes, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t c = g.class_of(i, j);
      ++s.degrees[c][i];
      ++s.degrees[c][j];
    }
  for (std::size_t c = 0; c < classes; ++c) {
    const auto& d = s.degrees[c];
    const std::size_t mx = n == 0 ? 0 : *std::max_element(d.begin(), d.end());
    s.max_degree.push_back(mx);
    const std::size_t total = std::accumulate(d.begin(), d.end(), std::size_t{0});
    s.average_degree.push_back(n == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(n));
    std::vector<std::size_t> hist(mx + 1, 0);
    for (std::size_t x : d) ++hist[x];
    s.histogram.push_back(std::move(hist));
  }
  return s;
}

std::vector<std::size_t> greedy_independent_set(const SimpleGraph& g) {
  std::vector<std::size_t> order(g.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return g.degree(a) < g.degree(b); });
  std::vector<bool> removed(g.size(), false);
  std::vector<std::size_t> out;
  for (std::size_t v : order) {
    if (removed[v]) continue;
    out.push_back(v);
    removed[v] = true;
    for (std::size_t w : g.neighbours(v)) removed[w] = true;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> greedy_independent_set(const LabelledGraph& g, std::size_t cls) {
  if (cls >= g.class_count()) throw Error(ErrorKind::InvalidIndex, "no such edge class");
  return greedy_independent_set(g.class_graph(cls));
}

EdgeColoring EdgeColoring::of_graph(const LabelledGraph& g) {
  EdgeColoring f;
  f.n = g.size();
  f.k = g.class_count();
  f.colors.assign(f.n * f.n, 0);
  for (std::size_t i = 0; i < f.n; ++i)
    for (std::size_t j = 0; j < f.n; ++j)
      if (i != j) f.colors[i * f.n + j] = static_cast<std::uint32_t>(g.class_of(i, j));
  return f;
}

namespace {

/// k^(kt) * m, saturating.
std::size_t ramsey_threshold(std::size_t k, std::size_t t, std::size_t m) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t acc = m;
  for (std::size_t i = 0; i < k * t; ++i) {
    if (k != 0 && acc > kMax / k) return kMax;
    acc *= k;
  }
  return acc;
}

}  // namespace

MonochromaticPair ramsey_pair(const EdgeColoring& f, std::size_t t, std::size_t m) {
  const std::size_t k = f.k;
  if (k < 1 || t < 1 || m < 1) throw Error(ErrorKind::InvalidParams, "need k, t, m >= 1");
  const std::size_t threshold = ramsey_threshold(k, t, m);
  if (threshold == std::numeric_limits<std::size_t>::max() || f.n <= threshold)
    throw Error(ErrorKind::TooSmall, "need n > k^(kt) m = " + std::to_string(threshold) + ", have n = " +
                                         std::to_string(f.n));

  MonochromaticPair out;
  std::vector<std::size_t> x(f.n);
  std::iota(x.begin(), x.end(), std::size_t{0});
  std::vector<std::size_t> picked;
  std::vector<std::uint32_t> picked_color;
  std::vector<std::size_t> counts(k);
  for (std::size_t step = 0; step < k * t; ++step) {
    const std::size_t v = x.front();
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t u : x)
      if (u != v) ++counts[f.color(v, u)];
    const auto c = static_cast<std::uint32_t>(std::max_element(counts.begin(), counts.end()) - counts.begin());
    std::vector<std::size_t> next;
    next.reserve(counts[c]);
    for (std::size_t u : x)
      if (u != v && f.color(v, u) == c) next.push_back(u);
    picked.push_back(v);
    picked_color.push_back(c);
    x = std::move(next);
    out.trace.push_back(x.size());
  }

  std::fill(counts.begin(), counts.end(), 0);
  for (std::uint32_t c : picked_color) ++counts[c];
  std::uint32_t colour = 0;
  while (counts[colour] < t) ++colour;
  for (std::size_t j = 0; j < picked.size() && out.y.size() < t; ++j)
    if (picked_color[j] == colour) out.y.push_back(picked[j]);
  out.x.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(m));
  out.color = colour;
  return out;
}

bool is_monochromatic(const EdgeColoring& f, const MonochromaticPair& pair) {
  std::vector<char> in_y(f.n, 0);
  for (std::size_t v : pair.y) {
    if (v >= f.n || in_y[v]) return false;
    in_y[v] = 1;
  }
  for (std::size_t v : pair.x)
    if (v >= f.n || in_y[v]) return false;
  std::vector<std::size_t> all(pair.x);
  all.insert(all.end(), pair.y.begin(), pair.y.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
  for (std::size_t y : pair.y)
    for (std::size_t u : all)
      if (u != y && f.color(y, u) != pair.color) return false;
  return true;
}

NegativeStructure negative_structure_report(const SimpleGraph& negatives) {
  NegativeStructure out;
  out.max_degree = negatives.max_degree();
  out.is_matching = out.max_degree <= 1;
  std::vector<bool> seen(negatives.size(), false);
  for (std::size_t s = 0; s < negatives.size(); ++s) {
    if (seen[s] || negatives.degree(s) == 0) continue;
    ComponentInfo comp;
    std::size_t degree_sum = 0;
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      ++comp.vertices;
      degree_sum += negatives.degree(v);
      for (std::size_t w : negatives.neighbours(v))
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
    }
    comp.edges = degree_sum / 2;
    comp.is_tree = comp.edges + 1 == comp.vertices;
    out.components.push_back(comp);
  }
  return out;
}

NegativeStructure negative_structure_report(const LabelledGraph& g) {
  const auto neg = g.negative_class();
  if (!neg) throw Error(ErrorKind::InvalidParams, "angle set has no negative element");
  return negative_structure_report(g.class_graph(*neg));
}

BallSubgraph ball_subgraph_lambda(const SimpleGraph& g, std::size_t v0, std::size_t radius) {
  if (v0 >= g.size()) throw Error(ErrorKind::InvalidIndex, "start vertex out of range");
  std::vector<std::size_t> dist(g.size(), std::numeric_limits<std::size_t>::max());
  BallSubgraph out;
  std::deque<std::size_t> queue{v0};
  dist[v0] = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    out.vertices.push_back(v);
    if (dist[v] == radius) continue;
    for (std::size_t w : g.neighbours(v))
      if (dist[w] == std::numeric_limits<std::size_t>::max()) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  out.graph = g.induced(out.vertices);
  out.lambda1 = spectral_radius(out.graph);
  return out;
}

double ball_lambda_bound(std::size_t min_degree, std::size_t radius) {
  if (min_degree < 1) return 0.0;
  return 2.0 * (1.0 - 1.0 / static_cast<double>(radius + 1)) * std::sqrt(static_cast<double>(min_degree) - 1.0);
}

namespace {

SimpleGraph path_graph(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

SimpleGraph cycle_graph(std::size_t n) {
  SimpleGraph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

SimpleGraph star_graph(std::size_t leaves) {
  SimpleGraph g(leaves + 1);
  for (std::size_t i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

/// Uniform labelled tree from a random Pruefer sequence.
SimpleGraph random_tree(std::size_t n, RngStream& rng) {
  SimpleGraph g(n);
  if (n < 2) return g;
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  std::vector<std::size_t> seq(n - 2);
  for (auto& s : seq) s = rng.below(n);
  std::vector<std::size_t> degree(n, 1);
  for (std::size_t s : seq) ++degree[s];
  for (std::size_t s : seq) {
    std::size_t leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    g.add_edge(leaf, s);
    --degree[leaf];
    --degree[s];
  }
  std::size_t u = n, v = n;
  for (std::size_t i = 0; i < n; ++i)
    if (degree[i] == 1) (u == n ? u : v) = i;
  g.add_edge(u, v);
  return g;
}

/// Connected graph on n vertices with exactly n edges.
SimpleGraph random_unicyclic(std::size_t n, RngStream& rng) {
  SimpleGraph g = random_tree(n, rng);
  while (g.edge_count() < n) {
    const std::size_t u = rng.below(n);
    const std::size_t v = rng.below(n);
    if (u != v) g.add_edge(u, v);
  }
  return g;
}

/// Vertex 0 of degree 4 (neighbours 1..4) plus four more edges, each touching
/// a neighbour of vertex 0, with at most four further vertices.
SimpleGraph random_degree4_eight_edges(RngStream& rng) {
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> edges{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
    std::size_t next = 5;
    SimpleGraph g(9);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    while (g.edge_count() < 8) {
      const std::size_t u = 1 + rng.below(4);
      // Other endpoint: a fresh vertex, another neighbour, or an existing outer vertex.
      const std::size_t choice = rng.below(3);
      std::size_t v;
      if (choice == 0 && next < 9)
        v = next++;
      else if (choice == 1)
        v = 1 + rng.below(4);
      else if (next > 5)
        v = 5 + rng.below(next - 5);
      else
        continue;
      if (v != u) g.add_edge(u, v);
    }
    std::vector<std::size_t> keep(next);
    std::iota(keep.begin(), keep.end(), std::size_t{0});
    SimpleGraph h = g.induced(keep);
    if (h.degree(0) == 4) return h;
  }
}

Certificate lambda_at_least(std::string name, const SimpleGraph& g, double threshold, std::string statement) {
  const double lambda = spectral_radius(g);
  return Certificate::compare(std::move(name), std::move(statement), threshold, lambda, 1e-9,
                              {{"lambda1", lambda},
                               {"threshold", threshold},
                               {"vertices", g.size()},
                               {"edges", g.edge_count()}});
}

}  // namespace

std::vector<Certificate> catalog_lambda_checks(std::uint64_t seed, std::size_t random_witnesses) {
  std::vector<Certificate> out;
  RngStream rng(seed);
  const double tree_bound = 20.0 / 11.0;

  out.push_back(lambda_at_least("tree11:path", path_graph(11), tree_bound, "20/11 <= lambda1(P11)"));
  for (std::size_t i = 0; i < random_witnesses; ++i)
    out.push_back(lambda_at_least("tree11:random" + std::to_string(i), random_tree(11, rng), tree_bound,
                                  "20/11 <= lambda1(random 11-vertex tree)"));

  for (std::size_t k = 3; k <= 10; ++k)
    out.push_back(lambda_at_least("unicyclic:C" + std::to_string(k), cycle_graph(k), 2.0, "2 <= lambda1(C_k)"));
  for (std::size_t i = 0; i < random_witnesses; ++i) {
    const std::size_t k = 3 + rng.below(8);
    out.push_back(lambda_at_least("unicyclic:random" + std::to_string(i), random_unicyclic(k, rng), 2.0,
                                  "2 <= lambda1(connected, k vertices, k edges)"));
  }

  const SimpleGraph star = star_graph(5);
  out.push_back(lambda_at_least("star:K1,5", star, 2.2, "2.2 <= lambda1(K_{1,5})"));
  {
    const double lambda = spectral_radius(star);
    out.push_back(Certificate::compare("star:K1,5:exact", "|lambda1(K_{1,5}) - sqrt(5)| <= 1e-9",
                                       std::abs(lambda - std::sqrt(5.0)), 1e-9, 0.0,
                                       {{"lambda1", lambda}, {"sqrt5", std::sqrt(5.0)}}));
  }

  SimpleGraph star4_plus = star_graph(4);
  star4_plus.add_edge(1, 2);
  out.push_back(lambda_at_least("degree4:K1,4+e", star4_plus, 2.25, "2.25 <= lambda1(K_{1,4} plus an edge)"));

  SimpleGraph spider(9);
  for (std::size_t i = 1; i <= 4; ++i) {
    spider.add_edge(0, i);
    spider.add_edge(i, i + 4);
  }
  out.push_back(lambda_at_least("eight_edges:spider", spider, 2.2, "2.2 <= lambda1(8 edges, degree-4 vertex)"));
  for (std::size_t i = 0; i < random_witnesses; ++i)
    out.push_back(lambda_at_least("eight_edges:random" + std::to_string(i), random_degree4_eight_edges(rng), 2.2,
                                  "2.2 <= lambda1(8 edges, degree-4 vertex)"));
  return out;
}

Certificate lambda_inequality_check(const Code& code, const AngleParams& params, const Tolerance& tol) {
  const AngleSet allowed = angle_set_after_projection(params, tol.angle_tol);
  const LabelledGraph g = build_graph(code, allowed);
  const std::size_t neg = *g.negative_class();
  const SimpleGraph h = g.class_graph(neg);
  const std::size_t n = code.size();

  double lambda = 0.0;
  std::vector<double> x(n, 0.0);
  if (h.edge_count() == 0) {
    x[0] = 1.0;
  } else {
    TopEigenpair top = top_eigenpair(h.adjacency(), static_cast<double>(h.max_degree()));
    lambda = top.value;
    x = std::move(top.vector);
  }
  const double sum = std::accumulate(x.begin(), x.end(), 0.0);
  const double eps = params.epsilon;
  const double lhs = params.sigma * (1.0 - eps) * lambda;
  const double rhs = 1.0 - eps + eps * sum * sum;
  const double direct = quadratic_form(gram_of(code), x);
  return Certificate::compare("lambda_inequality", "sigma (1-eps) lambda1(H) <= 1 - eps + eps <Jx,x>", lhs, rhs,
                              tol.psd_slack * static_cast<double>(n),
                              {{"lambda1", lambda},
                               {"sigma", params.sigma},
                               {"epsilon", eps},
                               {"Jxx", sum * sum},
                               {"Mxx", direct},
                               {"negative_edges", h.edge_count()}});
}

namespace {

struct CliqueSearch {
  const LabelledGraph& g;
  std::size_t cls;
  std::size_t t;
  std::size_t budget;
  std::size_t nodes = 0;
  std::vector<std::size_t> clique;

  bool extend(const std::vector<std::size_t>& candidates) {
    if (clique.size() == t) return true;
    if (++nodes > budget) return false;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (clique.size() + (candidates.size() - i) < t) return false;
      const std::size_t v = candidates[i];
      std::vector<std::size_t> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        if (g.class_of(v, candidates[j]) == cls) next.push_back(candidates[j]);
      clique.push_back(v);
      if (extend(next)) return true;
      clique.pop_back();
      if (nodes > budget) return false;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<std::size_t>> find_positive_clique(const LabelledGraph& g, std::size_t positive_class,
                                                             std::size_t t, double alpha, bool* from_ramsey,
                                                             std::size_t node_budget) {
  if (from_ramsey) *from_ramsey = false;
  if (t == 0) return std::vector<std::size_t>{};
  if (t > g.size()) return std::nullopt;
  // A negative clique has at most 1/alpha + 1 vertices, so a monochromatic
  // pair with |Y| >= floor(1/alpha) + 2 must be positive.
  const std::size_t t_forced = std::max(t, static_cast<std::size_t>(std::floor(1.0 / alpha)) + 2);
  try {
    const MonochromaticPair pair = ramsey_pair(EdgeColoring::of_graph(g), t_forced, 1);
    if (pair.color == positive_class) {
      std::vector<std::size_t> y(pair.y.begin(), pair.y.begin() + static_cast<std::ptrdiff_t>(t));
      std::sort(y.begin(), y.end());
      if (from_ramsey) *from_ramsey = true;
      return y;
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TooSmall) throw;
  }
  CliqueSearch search{g, positive_class, t, node_budget, 0, {}};
  std::vector<std::size_t> all(g.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  if (search.extend(all)) return search.clique;
  return std::nullopt;
}

ReductionOutcome reduction_pipeline(const Code& code, std::size_t t, const Tolerance& tol) {
  if (t < 1) throw Error(ErrorKind::InvalidParams, "clique size t must be positive");
  if (code.size() < 2) throw Error(ErrorKind::NotEquiangular, "need at least two vectors");
  const auto alpha = detect_equiangular(code, tol);
  if (!alpha || *alpha < tol.angle_tol) throw Error(ErrorKind::NotEquiangular, "input is not a {-alpha, alpha}-code");

  ReductionOutcome out;
  out.alpha = *alpha;
  out.t = t;
  out.total = code.size();

  const AngleSet pm = AngleSet::of_points({-*alpha, *alpha}, tol.angle_tol);
  const LabelledGraph g = build_graph(code, pm);
  const std::size_t positive = 1;
  auto clique = find_positive_clique(g, positive, t, *alpha, &out.clique_from_ramsey);
  if (!clique) throw Error(ErrorKind::NoClique, "no positive clique of size " + std::to_string(t) + " found");
  out.y = std::move(*clique);

  std::vector<bool> in_y(code.size(), false);
  for (std::size_t v : out.y) in_y[v] = true;
  auto positive_set = [&](const LabelledGraph& graph, std::size_t v) {
    std::vector<bool> member(t, false);
    std::size_t count = 0;
    for (std::size_t i = 0; i < t; ++i)
      if (graph.class_of(v, out.y[i]) == positive) {
        member[i] = true;
        ++count;
      }
    return std::pair{member, count};
  };

  for (std::size_t v = 0; v < code.size(); ++v) {
    if (in_y[v]) continue;
    if (2 * positive_set(g, v).second < t) out.switched.push_back(v);
  }
  const Code switched = switch_vertices(code, out.switched);
  const LabelledGraph gs = build_graph(switched, pm);

  const bool use_mask = t <= 24;
  std::map<std::uint64_t, Bucket> buckets;
  for (std::size_t v = 0; v < code.size(); ++v) {
    if (in_y[v]) continue;
    const auto [member, count] = positive_set(gs, v);
    if (count == t) {
      out.s_y.push_back(v);
      continue;
    }
    std::uint64_t key = count;
    std::optional<std::uint32_t> mask;
    if (use_mask) {
      std::uint32_t m = 0;
      for (std::size_t i = 0; i < t; ++i)
        if (member[i]) m |= std::uint32_t{1} << i;
      mask = m;
      key = m;
    }
    Bucket& b = buckets[key];
    b.mask = mask;
    b.t_size = count;
    b.members.push_back(v);
  }
  for (auto& [key, b] : buckets) out.buckets.push_back(std::move(b));

  out.accounted = out.s_y.size() + out.y.size();
  for (const Bucket& b : out.buckets) out.accounted += b.members.size();

  const double garbage = 2.0 / (*alpha * *alpha);
  for (const Bucket& b : out.buckets) {
    if (2 * b.t_size < t || b.t_size >= t || static_cast<double>(b.t_size) <= garbage) continue;
    const bool ok = static_cast<double>(b.members.size()) < garbage;
    out.garbage_bound_holds = out.garbage_bound_holds.value_or(true) && ok;
  }

  if (!out.s_y.empty()) {
    Code projected = project_onto_complement(switched, out.s_y, out.y, tol);
    const AngleSet target = angle_set_after_projection(AngleParams::make(*alpha, t), std::max(tol.angle_tol, 1e-8));
    if (!validate_code(projected, target).pass)
      throw Error(ErrorKind::InternalError, "projected code misses the predicted angle set");
    out.projected = std::move(projected);
  }
  return out;
}

}  // namespace equicode
