#pragma once

// Reference implementations the tests trust instead of the library:
// map-based routing tallies, plain recursive path enumeration with no
// pruning, Pruefer-sequence tree generation, and textbook closed-form
// spectra. Anything checked against these is checked against independent
// machinery, not against the code under test.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "routegap/graph.hpp"
#include "routegap/routing.hpp"

namespace oracle {

struct RoutingTally {
  std::int64_t gamma_star = 0;
  std::int64_t bottleneck = 0;
  std::int64_t forwarding = 0;
  std::int64_t total_length = 0;
};

/// Recounts every routing statistic with std::map counters.
inline RoutingTally tally(const routegap::Routing& r) {
  RoutingTally t;
  std::map<std::pair<int, int>, std::int64_t> directed;
  std::map<std::pair<int, int>, std::int64_t> undirected;
  const int n = r.vertex_count();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || !r.has_path(x, y)) continue;
      const routegap::Path& p = r.path(x, y);
      t.gamma_star = std::max<std::int64_t>(t.gamma_star, p.length());
      t.total_length += p.length();
      for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
        const int u = p.vertices[i];
        const int v = p.vertices[i + 1];
        ++directed[{u, v}];
        ++undirected[{std::min(u, v), std::max(u, v)}];
      }
    }
  }
  for (const auto& [edge, count] : directed) {
    t.bottleneck = std::max(t.bottleneck, count);
  }
  for (const auto& [edge, count] : undirected) {
    t.forwarding = std::max(t.forwarding, count);
  }
  return t;
}

/// All simple x->y paths by plain recursion, in discovery order.
inline void all_simple_paths(const routegap::Graph& g, int x, int y,
                             std::vector<routegap::Path>& out) {
  std::vector<int> current{x};
  std::vector<bool> used(g.vertex_count(), false);
  used[x] = true;
  const std::function<void(int)> go = [&](int v) {
    if (v == y) {
      routegap::Path p;
      p.vertices = current;
      out.push_back(std::move(p));
      return;
    }
    for (const int w : g.neighbors(v)) {
      if (used[w]) continue;
      used[w] = true;
      current.push_back(w);
      go(w);
      current.pop_back();
      used[w] = false;
    }
  };
  go(x);
}

struct NaiveOptimum {
  std::int64_t min_gamma_b = 0;
  std::int64_t min_b = 0;
  std::int64_t leaves = 0;
};

/// Exact minima of gamma_star*b and b over all simple-path routings, by full
/// product enumeration with zero pruning; both objectives in one sweep.
inline NaiveOptimum naive_optimum(const routegap::Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<routegap::Path>> candidates;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      std::vector<routegap::Path> paths;
      all_simple_paths(g, x, y, paths);
      candidates.push_back(std::move(paths));
    }
  }

  std::vector<std::int32_t> load(static_cast<std::size_t>(n) * n, 0);
  NaiveOptimum best;
  best.min_gamma_b = std::numeric_limits<std::int64_t>::max();
  best.min_b = std::numeric_limits<std::int64_t>::max();

  const std::function<void(std::size_t, std::int64_t, std::int64_t)> place =
      [&](std::size_t k, std::int64_t gs, std::int64_t b) {
        if (k == candidates.size()) {
          ++best.leaves;
          best.min_gamma_b = std::min(best.min_gamma_b, gs * b);
          best.min_b = std::min(best.min_b, b);
          return;
        }
        for (const routegap::Path& p : candidates[k]) {
          std::int64_t nb = b;
          for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
            const std::int32_t c =
                ++load[static_cast<std::size_t>(p.vertices[i]) * n +
                       p.vertices[i + 1]];
            nb = std::max<std::int64_t>(nb, c);
          }
          place(k + 1, std::max<std::int64_t>(gs, p.length()), nb);
          for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
            --load[static_cast<std::size_t>(p.vertices[i]) * n + p.vertices[i + 1]];
          }
        }
      };
  place(0, 0, 0);
  return best;
}

/// Decodes a Pruefer sequence over {0..n-1} (length n-2) into tree edges.
inline std::vector<std::pair<int, int>> tree_from_pruefer(
    int n, const std::vector<int>& seq) {
  std::vector<int> degree(n, 1);
  for (const int v : seq) ++degree[v];
  std::vector<std::pair<int, int>> edges;
  std::vector<bool> gone(n, false);
  for (const int v : seq) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (!gone[leaf] && degree[leaf] == 1) {
        edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
        gone[leaf] = true;
        --degree[v];
        break;
      }
    }
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v) {
    if (!gone[v] && degree[v] == 1) (a < 0 ? a : b) = v;
  }
  edges.emplace_back(a, b);
  return edges;
}

/// Visits every labeled tree on n >= 2 vertices exactly once.
inline void for_each_labeled_tree(
    int n, const std::function<void(const std::vector<std::pair<int, int>>&)>& fn) {
  if (n == 2) {
    fn({{0, 1}});
    return;
  }
  std::vector<int> seq(n - 2, 0);
  while (true) {
    fn(tree_from_pruefer(n, seq));
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
}

/// Every connected labeled graph on n vertices, by edge-subset sweep.
inline std::vector<routegap::Graph> all_connected_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  std::vector<routegap::Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj(n);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (mask & (1u << i)) {
        edges.push_back(slots[i]);
        adj[slots[i].first].push_back(slots[i].second);
        adj[slots[i].second].push_back(slots[i].first);
      }
    }
    if (edges.empty()) continue;
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const int w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached == n) out.push_back(routegap::Graph::from_edges(n, edges));
  }
  return out;
}

/// Walk spectra known in closed form, sorted descending.
inline std::vector<double> complete_walk_spectrum(int n) {
  std::vector<double> values{1.0};
  values.insert(values.end(), n - 1, -1.0 / (n - 1));
  return values;
}

inline std::vector<double> cycle_walk_spectrum(int n) {
  const double pi = std::acos(-1.0);
  std::vector<double> values;
  for (int k = 0; k < n; ++k) {
    values.push_back(std::cos(2.0 * pi * k / n));
  }
  std::sort(values.rbegin(), values.rend());
  return values;
}

inline std::vector<double> path_walk_spectrum(int n) {
  const double pi = std::acos(-1.0);
  std::vector<double> values;
  for (int k = 0; k < n; ++k) {
    values.push_back(std::cos(pi * k / (n - 1)));
  }
  return values;  // already descending
}

}  // namespace oracle
