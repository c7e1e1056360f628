#pragma once

#include <cstdint>

#include "routegap/graph.hpp"
#include "routegap/routing.hpp"
#include "routegap/spanning_tree.hpp"

namespace routegap {

/// Shortest-path routing: for each ordered pair, the path read off a BFS
/// parent chain with neighbors scanned in ascending id order. gamma_star
/// equals the graph diameter.
Routing geodesic_routing(const Graph& g);

/// Routes every ordered pair along its unique tree path. The result is
/// subordinate with respect to each of its paths.
Routing spanning_tree_routing(const Graph& g, const SpanningTree& t);

/// Routing on the complete graph K_n where every ordered pair takes its
/// single-edge geodesic except (0, n-1), which takes the Hamiltonian path
/// 0, 1, ..., n-1. Yields gamma_star = n-1 and bottleneck 2; for n >= 17 the
/// Cheeger bound beats the Poincare bound under this routing.
Routing counterexample_routing(int n);

/// Same single-long-detour scheme with the detour pair (0, detour_length)
/// routed along 0, 1, ..., detour_length. Requires 1 <= detour_length <= n-1.
Routing long_path_routing(int n, int detour_length);

/// Counterexample variant whose long path is an Eulerian circuit minus its
/// final edge: over all of K_n for odd n, over the induced complete graph on
/// {0, ..., n-2} for even n. The circuit is built by Hierholzer's method with
/// lowest-id edge selection. Requires n >= 7.
Routing eulerian_counterexample_routing(int n);

/// True iff every subsegment of p between distinct vertices is itself the
/// canonical path of r between those endpoints. p must be one of r's paths.
bool is_subordinate(const Routing& r, const Path& p);

/// One uniformly seeded random simple path per ordered pair, drawn by
/// depth-first search with randomly ordered neighbor visits.
Routing random_simple_routing(const Graph& g, std::uint64_t seed);

}  // namespace routegap
