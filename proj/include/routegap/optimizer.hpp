#pragma once

#include <cstdint>
#include <vector>

#include "routegap/bounds.hpp"
#include "routegap/graph.hpp"
#include "routegap/routing.hpp"

namespace routegap {

/// What a routing search minimizes. The Poincare bound improves monotonically
/// as gamma_star * b shrinks and the Cheeger bound as b shrinks, so the two
/// bound objectives reduce to the two integer objectives.
enum class Objective { gamma_star_times_b, bottleneck, poincare, cheeger };

Objective objective_from_name(const std::string& name);
std::string to_string(Objective o);

struct SearchLimits {
  int max_vertices = 5;
  // Budget on the number of candidate simple paths summed over ordered
  // pairs; past this the product space is hopeless even with pruning.
  std::int64_t max_total_paths = 10'000'000;
};

struct SearchResult {
  Routing routing;
  Objective objective = Objective::gamma_star_times_b;
  std::int64_t integer_value = 0;  // gamma_star * b or b, per objective
  double objective_value = 0.0;    // bound value for the bound objectives
  bool optimal = false;            // true only for exhaustive search
  std::int64_t evaluations = 0;
};

/// All simple paths from x to y of length at most max_length, ordered by
/// (length, vertex sequence). Stops at max_count paths: throws LimitError
/// when truncate is false, truncates otherwise.
std::vector<Path> enumerate_simple_paths(const Graph& g, int x, int y, int max_length,
                                         std::int64_t max_count, bool truncate = false);

/// Exact optimum over all routings whose paths are simple, by depth-first
/// product search over per-pair path lists with branch-and-bound pruning on
/// the partial bottleneck, partial longest path, and the pigeonhole floor.
/// Restricting to simple paths loses nothing: a repeated vertex can only
/// increase both integer objectives.
SearchResult enumerate_optimal(const Graph& g, Objective obj,
                               const SearchLimits& limits = {});

/// First-improvement descent from the geodesic routing. A move replaces one
/// ordered pair's path with another simple path of length at most
/// gamma_star + 2; pairs are scanned in seeded random order, candidate paths
/// in (length, lexicographic) order. Never worsens the objective.
SearchResult local_search(const Graph& g, Objective obj, std::uint64_t seed,
                          std::int64_t max_iters = 1000);

/// The two optimal integer objectives side by side, with the bound each one
/// yields and whether one routing attains both minima simultaneously.
struct OptimalComparison {
  std::int64_t min_gamma_b = 0;
  std::int64_t min_b = 0;
  double best_poincare = 0.0;
  double best_cheeger = 0.0;
  Winner winner = Winner::tie;
  bool single_routing_attains_both = false;
  std::int64_t gamma_star_at_optimum = 0;  // gamma_star of the min gamma*b routing
  int diameter = 0;
  std::int64_t evaluations = 0;
};
OptimalComparison optimal_bound_comparison(const Graph& g,
                                           const SearchLimits& limits = {});

}  // namespace routegap
