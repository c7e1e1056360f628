#include "routegap/constructions.hpp"

#include <algorithm>
#include <queue>
#include <vector>

#include "routegap/errors.hpp"
#include "routegap/rng.hpp"

namespace routegap {

Routing geodesic_routing(const Graph& g) {
  const int n = g.vertex_count();
  Routing r(n);
  std::vector<int> parent(n);
  for (int src = 0; src < n; ++src) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[src] = src;
    std::queue<int> frontier;
    frontier.push(src);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (int w : g.neighbors(u)) {
        if (parent[w] < 0) {
          parent[w] = u;
          frontier.push(w);
        }
      }
    }
    for (int dst = 0; dst < n; ++dst) {
      if (dst == src) continue;
      Path p;
      for (int v = dst; v != src; v = parent[v]) p.vertices.push_back(v);
      p.vertices.push_back(src);
      std::reverse(p.vertices.begin(), p.vertices.end());
      r.set_path(std::move(p));
    }
  }
  return r;
}

Routing spanning_tree_routing(const Graph& g, const SpanningTree& t) {
  if (t.host() != g)
    throw InapplicableError("spanning_tree_routing: tree does not span this graph");
  const int n = g.vertex_count();
  Routing r(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) r.set_path(t.tree_path(x, y));
  return r;
}

namespace {

Routing complete_geodesics(int n) {
  Routing r(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) r.set_path(Path{{x, y}});
  return r;
}

}  // namespace

Routing long_path_routing(int n, int detour_length) {
  if (n < 3) throw std::invalid_argument("long_path_routing: n must be >= 3");
  if (detour_length < 1 || detour_length > n - 1)
    throw std::invalid_argument("long_path_routing: detour length outside [1, n-1]");
  Routing r = complete_geodesics(n);
  Path detour;
  for (int v = 0; v <= detour_length; ++v) detour.vertices.push_back(v);
  r.set_path(std::move(detour));
  return r;
}

Routing counterexample_routing(int n) { return long_path_routing(n, n - 1); }

namespace {

// Eulerian circuit by Hierholzer's method, lowest-id available neighbor
// first. Every vertex degree must be even; the graph is connected by
// construction here.
std::vector<int> eulerian_circuit(const Graph& g, const std::vector<int>& vertices) {
  const int n = g.vertex_count();
  // Track used undirected edges in a dense table; cursors resume neighbor
  // scans where they left off.
  std::vector<char> used(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<char> in_sub(n, 0);
  for (int v : vertices) in_sub[v] = 1;

  std::vector<int> stack{vertices.front()};
  std::vector<int> circuit;
  while (!stack.empty()) {
    const int u = stack.back();
    bool extended = false;
    for (auto& i = cursor[u]; i < g.neighbors(u).size(); ++i) {
      const int w = g.neighbors(u)[i];
      if (!in_sub[w]) continue;
      const auto key = static_cast<std::size_t>(std::min(u, w)) * n + std::max(u, w);
      if (used[key]) continue;
      used[key] = 1;
      stack.push_back(w);
      extended = true;
      break;
    }
    if (!extended) {
      circuit.push_back(u);
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

}  // namespace

Routing eulerian_counterexample_routing(int n) {
  if (n < 7) throw std::invalid_argument("eulerian_counterexample_routing: n must be >= 7");
  const Graph g = complete_graph(n);
  // Odd n: every degree of K_n is even, take the circuit over all vertices.
  // Even n: take it over the induced complete graph on {0, ..., n-2}.
  const int sub = (n % 2 == 1) ? n : n - 1;
  std::vector<int> vertices(sub);
  for (int v = 0; v < sub; ++v) vertices[v] = v;
  std::vector<int> circuit = eulerian_circuit(g, vertices);
  circuit.pop_back();  // delete the final edge of the circuit
  Routing r = complete_geodesics(n);
  Path detour;
  detour.vertices = std::move(circuit);
  r.set_path(std::move(detour));
  return r;
}

bool is_subordinate(const Routing& r, const Path& p) {
  const auto m = p.vertices.size();
  if (m < 2 || r.path(p.source(), p.target()) != p)
    throw std::invalid_argument("is_subordinate: path is not part of the routing");
  for (std::size_t i = 0; i + 1 < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const int a = p.vertices[i], b = p.vertices[j];
      if (a == b) continue;
      const Path& canonical = r.path(a, b);
      if (canonical.vertices.size() != j - i + 1) return false;
      if (!std::equal(canonical.vertices.begin(), canonical.vertices.end(),
                      p.vertices.begin() + static_cast<std::ptrdiff_t>(i)))
        return false;
    }
  }
  return true;
}

Routing random_simple_routing(const Graph& g, std::uint64_t seed) {
  Rng rng(seed);
  const int n = g.vertex_count();
  Routing r(n);
  std::vector<char> on_path(n, 0);
  std::vector<int> nbrs;

  // Random simple path by depth-first search; backtracks out of dead ends,
  // so it always terminates with a path on a connected graph.
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      std::fill(on_path.begin(), on_path.end(), 0);
      std::vector<int> walk{x};
      std::vector<std::vector<int>> pending(1);
      on_path[x] = 1;
      nbrs = g.neighbors(x);
      rng.shuffle(nbrs);
      pending[0] = nbrs;
      while (walk.back() != y) {
        auto& options = pending.back();
        int next = -1;
        while (!options.empty()) {
          const int w = options.back();
          options.pop_back();
          if (!on_path[w]) {
            next = w;
            break;
          }
        }
        if (next < 0) {
          on_path[walk.back()] = 0;
          walk.pop_back();
          pending.pop_back();
          continue;
        }
        walk.push_back(next);
        on_path[next] = 1;
        if (next == y) break;
        nbrs = g.neighbors(next);
        rng.shuffle(nbrs);
        pending.push_back(nbrs);
      }
      r.set_path(Path{walk});
    }
  }
  return r;
}

}  // namespace routegap
