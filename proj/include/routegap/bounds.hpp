#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "routegap/graph.hpp"
#include "routegap/rational.hpp"
#include "routegap/routing.hpp"
#include "routegap/spanning_tree.hpp"

namespace routegap {

enum class Winner { poincare, cheeger, tie };

std::string to_string(Winner w);

/// The two routing-based upper bounds on the second-largest walk eigenvalue
/// and their exact comparison. The Poincare bound is at least as good as the
/// Cheeger bound iff 4 d^2 b >= gamma_star |E|, so the winner is decided on
/// integers, never floats.
struct BoundsReport {
  std::int64_t gamma_star = 0;
  std::int64_t b = 0;
  Rational gamma_bar;
  std::int64_t total_length = 0;  // M
  double poincare = 0.0;
  double cheeger = 0.0;
  std::int64_t comparison_lhs = 0;  // 4 d^2 b
  std::int64_t comparison_rhs = 0;  // gamma_star |E|
  Winner winner = Winner::tie;

  friend bool operator==(const BoundsReport&, const BoundsReport&) = default;
};

/// 1 - 2|E| / (d^2 gamma_star b). Can be negative.
double poincare_bound(const Graph& g, const Routing& r);

/// 1 - |E|^2 / (2 d^4 b^2).
double cheeger_bound(const Graph& g, const Routing& r);

BoundsReport compare(const Graph& g, const Routing& r);

/// Sufficient condition for the Poincare bound to win: if the longest path
/// is at most eight times the average (8 gamma_bar >= gamma_star, exact),
/// then 4 d^2 b >= gamma_star |E|. The implication must hold for every
/// routing; premise and conclusion are reported separately.
struct Theorem1Result {
  bool premise = false;
  bool conclusion = false;
  bool implication_holds() const { return !premise || conclusion; }
  friend bool operator==(const Theorem1Result&, const Theorem1Result&) = default;
};
Theorem1Result theorem1_check(const Graph& g, const Routing& r);

/// Subordination-based strict comparison. If some longest path of the
/// routing has every subsegment canonical and gamma_star > 4|E|/d^2 - 2,
/// then d^2 b > gamma_star |E|, via the central-edge counting floor
/// b >= floor((gamma_star+1)/2) * ((gamma_star+1) - floor((gamma_star+1)/2)).
struct Lemma1Result {
  bool subordinate_longest = false;  // some longest path is subordinate
  bool length_premise = false;       // gamma_star > 4|E|/d^2 - 2, exact
  std::int64_t gamma_star = 0;
  std::int64_t b = 0;
  std::int64_t d2b = 0;
  std::int64_t gamma_star_edges = 0;
  std::int64_t central_edge_floor = 0;

  bool premise() const { return subordinate_longest && length_premise; }
  bool conclusion_strict() const { return d2b > gamma_star_edges; }
  bool central_floor_holds() const { return b >= central_edge_floor; }
  friend bool operator==(const Lemma1Result&, const Lemma1Result&) = default;
};
Lemma1Result lemma1_check(const Graph& g, const Routing& r);

/// Bottleneck floor for trees: b_T >= (n-1)^2 / d_T^2, compared as
/// b_T d_T^2 >= (n-1)^2. Also reports a witness edge whose removal leaves a
/// smaller side of at least (n-1)/d_T vertices. The input graph must itself
/// be a tree with d_T >= 2.
struct Lemma2Result {
  std::int64_t b_t = 0;
  int d_t = 0;
  std::int64_t lhs = 0;  // b_T d_T^2
  std::int64_t rhs = 0;  // (n-1)^2
  std::pair<int, int> witness_edge{-1, -1};
  int witness_small_side = 0;

  bool holds() const { return lhs >= rhs; }
  friend bool operator==(const Lemma2Result&, const Lemma2Result&) = default;
};
Lemma2Result lemma2_check(const Graph& tree);

/// For the routing along any spanning tree, d^2 b >= gamma_star |E|, with
/// strict inequality as soon as the graph has at least 3 vertices.
struct Theorem2Result {
  std::int64_t d2b = 0;
  std::int64_t gamma_star_edges = 0;
  int vertex_count = 0;

  bool holds() const { return d2b >= gamma_star_edges; }
  bool strict() const { return d2b > gamma_star_edges; }
  friend bool operator==(const Theorem2Result&, const Theorem2Result&) = default;
};
Theorem2Result theorem2_check(const Graph& g, const SpanningTree& t);

}  // namespace routegap
