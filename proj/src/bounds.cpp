#include "routegap/bounds.hpp"

#include <algorithm>

#include "routegap/constructions.hpp"
#include "routegap/errors.hpp"

namespace routegap {

std::string to_string(Winner w) {
  switch (w) {
    case Winner::poincare: return "poincare";
    case Winner::cheeger: return "cheeger";
    case Winner::tie: return "tie";
  }
  return "tie";
}

double poincare_bound(const Graph& g, const Routing& r) {
  const double d = g.max_degree();
  const double denom = d * d * static_cast<double>(gamma_star(r)) *
                       static_cast<double>(bottleneck(r));
  return 1.0 - 2.0 * static_cast<double>(g.edge_count()) / denom;
}

double cheeger_bound(const Graph& g, const Routing& r) {
  const double d = g.max_degree();
  const double e = static_cast<double>(g.edge_count());
  const double b = static_cast<double>(bottleneck(r));
  return 1.0 - e * e / (2.0 * d * d * d * d * b * b);
}

BoundsReport compare(const Graph& g, const Routing& r) {
  BoundsReport report;
  report.gamma_star = gamma_star(r);
  report.b = bottleneck(r);
  report.total_length = total_length(r);
  report.gamma_bar = average_length(r);

  const auto d = static_cast<std::int64_t>(g.max_degree());
  report.comparison_lhs = 4 * d * d * report.b;
  report.comparison_rhs = report.gamma_star * g.edge_count();
  report.poincare = 1.0 - 2.0 * static_cast<double>(g.edge_count()) /
                              (static_cast<double>(d * d) *
                               static_cast<double>(report.gamma_star) *
                               static_cast<double>(report.b));
  const double e = static_cast<double>(g.edge_count());
  const double db = static_cast<double>(d);
  report.cheeger = 1.0 - e * e / (2.0 * db * db * db * db *
                                  static_cast<double>(report.b) *
                                  static_cast<double>(report.b));
  if (report.comparison_lhs > report.comparison_rhs)
    report.winner = Winner::poincare;
  else if (report.comparison_lhs < report.comparison_rhs)
    report.winner = Winner::cheeger;
  else
    report.winner = Winner::tie;
  return report;
}

Theorem1Result theorem1_check(const Graph& g, const Routing& r) {
  Theorem1Result result;
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const std::int64_t gs = gamma_star(r);
  // 8 gamma_bar >= gamma_star  <=>  8 M >= gamma_star n^2
  result.premise = 8 * total_length(r) >= gs * n * n;
  const auto d = static_cast<std::int64_t>(g.max_degree());
  result.conclusion = 4 * d * d * bottleneck(r) >= gs * g.edge_count();
  return result;
}

Lemma1Result lemma1_check(const Graph& g, const Routing& r) {
  Lemma1Result result;
  result.gamma_star = gamma_star(r);
  result.b = bottleneck(r);
  const auto d = static_cast<std::int64_t>(g.max_degree());
  result.d2b = d * d * result.b;
  result.gamma_star_edges = result.gamma_star * g.edge_count();
  // gamma_star > 4|E|/d^2 - 2  <=>  d^2 (gamma_star + 2) > 4|E|
  result.length_premise = d * d * (result.gamma_star + 2) > 4 * g.edge_count();
  const std::int64_t half = (result.gamma_star + 1) / 2;
  result.central_edge_floor = half * ((result.gamma_star + 1) - half);

  const int n = g.vertex_count();
  for (int x = 0; x < n && !result.subordinate_longest; ++x) {
    for (int y = 0; y < n && !result.subordinate_longest; ++y) {
      if (x == y || !r.has_path(x, y)) continue;
      const Path& p = r.path(x, y);
      if (p.length() == result.gamma_star && is_subordinate(r, p))
        result.subordinate_longest = true;
    }
  }
  return result;
}

Lemma2Result lemma2_check(const Graph& tree) {
  if (!is_tree(tree)) throw InapplicableError("lemma2_check: graph is not a tree");
  Lemma2Result result;
  result.d_t = tree.max_degree();
  if (result.d_t < 2) throw InapplicableError("lemma2_check: tree max degree must be >= 2");

  const SpanningTree self(tree, tree.edges());
  result.b_t = bottleneck(spanning_tree_routing(tree, self));
  const auto n = static_cast<std::int64_t>(tree.vertex_count());
  result.lhs = result.b_t * result.d_t * result.d_t;
  result.rhs = (n - 1) * (n - 1);

  // Witness: the edge maximizing the smaller cut side always leaves at
  // least (n-1)/d_T vertices on that side.
  int best_side = 0, best_vertex = -1;
  for (int v = 1; v < n; ++v) {
    const int side = std::min(self.subtree_size(v),
                              tree.vertex_count() - self.subtree_size(v));
    if (side > best_side) {
      best_side = side;
      best_vertex = v;
    }
  }
  result.witness_edge = {std::min(best_vertex, self.parent()[best_vertex]),
                         std::max(best_vertex, self.parent()[best_vertex])};
  result.witness_small_side = best_side;
  return result;
}

Theorem2Result theorem2_check(const Graph& g, const SpanningTree& t) {
  Theorem2Result result;
  result.vertex_count = g.vertex_count();
  const Routing r = spanning_tree_routing(g, t);
  const auto d = static_cast<std::int64_t>(g.max_degree());
  result.d2b = d * d * bottleneck(r);
  result.gamma_star_edges = gamma_star(r) * g.edge_count();
  return result;
}

}  // namespace routegap
