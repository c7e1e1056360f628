#include "routegap/spanning_tree.hpp"

#include <algorithm>
#include <queue>
#include <stack>

#include "routegap/errors.hpp"
#include "routegap/rng.hpp"

namespace routegap {

SpanningTree::SpanningTree(const Graph& host,
                           const std::vector<std::pair<int, int>>& tree_edges)
    : host_(host) {
  const int n = host.vertex_count();
  if (static_cast<int>(tree_edges.size()) != n - 1)
    throw InapplicableError("spanning tree needs exactly n-1 edges");
  tree_adjacency_.resize(n);
  for (const auto& [u, v] : tree_edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || !host.has_edge(u, v))
      throw InapplicableError("tree edge {" + std::to_string(u) + ", " +
                              std::to_string(v) + "} is not an edge of the host");
    tree_adjacency_[u].push_back(v);
    tree_adjacency_[v].push_back(u);
  }
  for (auto& nbrs : tree_adjacency_) std::sort(nbrs.begin(), nbrs.end());

  // Root at 0; n-1 edges + full reachability imply acyclicity.
  parent_.assign(n, -2);
  depth_.assign(n, 0);
  parent_[0] = -1;
  std::queue<int> frontier;
  frontier.push(0);
  int reached = 1;
  std::vector<int> order;
  order.reserve(n);
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    order.push_back(u);
    for (int w : tree_adjacency_[u]) {
      if (parent_[w] == -2) {
        parent_[w] = u;
        depth_[w] = depth_[u] + 1;
        ++reached;
        frontier.push(w);
      }
    }
  }
  if (reached != n) throw InapplicableError("tree edges do not span the host");

  subtree_size_.assign(n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent_[*it] >= 0) subtree_size_[parent_[*it]] += subtree_size_[*it];
}

std::vector<std::pair<int, int>> SpanningTree::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 1; v < vertex_count(); ++v)
    out.emplace_back(std::min(v, parent_[v]), std::max(v, parent_[v]));
  std::sort(out.begin(), out.end());
  return out;
}

int SpanningTree::max_degree() const {
  int d = 0;
  for (const auto& nbrs : tree_adjacency_) d = std::max(d, static_cast<int>(nbrs.size()));
  return d;
}

Path SpanningTree::tree_path(int x, int y) const {
  // Climb the deeper endpoint until the walks meet at the lowest common
  // ancestor, then splice.
  std::vector<int> from_x{x}, from_y{y};
  int a = x, b = y;
  while (a != b) {
    if (depth_[a] >= depth_[b]) {
      a = parent_[a];
      from_x.push_back(a);
    } else {
      b = parent_[b];
      from_y.push_back(b);
    }
  }
  Path p;
  p.vertices = std::move(from_x);
  p.vertices.insert(p.vertices.end(), from_y.rbegin() + 1, from_y.rend());
  return p;
}

namespace {

SpanningTree search_tree(const Graph& g, int root, bool depth_first) {
  const int n = g.vertex_count();
  if (root < 0 || root >= n) throw std::invalid_argument("root out of range");
  std::vector<char> seen(n, 0);
  std::vector<std::pair<int, int>> edges;
  seen[root] = 1;
  if (depth_first) {
    std::stack<int> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const int u = frontier.top();
      frontier.pop();
      for (int w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          edges.emplace_back(u, w);
          frontier.push(u);  // revisit u for its remaining neighbors
          frontier.push(w);
          break;
        }
      }
    }
  } else {
    std::queue<int> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (int w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          edges.emplace_back(u, w);
          frontier.push(w);
        }
      }
    }
  }
  return SpanningTree(g, edges);
}

}  // namespace

SpanningTree bfs_tree(const Graph& g, int root) { return search_tree(g, root, false); }

SpanningTree dfs_tree(const Graph& g, int root) { return search_tree(g, root, true); }

SpanningTree hamiltonian_path_tree(const Graph& g) {
  if (!is_complete(g))
    throw InapplicableError("hamiltonian_path_tree: host graph must be complete");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < g.vertex_count(); ++v) edges.emplace_back(v - 1, v);
  return SpanningTree(g, edges);
}

SpanningTree star_tree(const Graph& g, int hub) {
  if (!is_complete(g))
    throw InapplicableError("star_tree: host graph must be complete");
  if (hub < 0 || hub >= g.vertex_count())
    throw std::invalid_argument("star_tree: hub out of range");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (v != hub) edges.emplace_back(hub, v);
  return SpanningTree(g, edges);
}

SpanningTree random_spanning_tree(const Graph& g, std::uint64_t seed) {
  Rng rng(seed);
  const int n = g.vertex_count();
  const int root = static_cast<int>(rng.uniform_int(0, n - 1));
  std::vector<char> seen(n, 0);
  std::vector<std::pair<int, int>> edges;
  std::stack<int> frontier;
  seen[root] = 1;
  frontier.push(root);
  std::vector<int> nbrs;
  while (!frontier.empty()) {
    const int u = frontier.top();
    frontier.pop();
    nbrs = g.neighbors(u);
    rng.shuffle(nbrs);
    for (int w : nbrs) {
      if (!seen[w]) {
        seen[w] = 1;
        edges.emplace_back(u, w);
        frontier.push(w);
      }
    }
  }
  return SpanningTree(g, edges);
}

std::int64_t cut_product_bottleneck(const SpanningTree& t) {
  const auto n = static_cast<std::int64_t>(t.vertex_count());
  std::int64_t best = 0;
  for (int v = 1; v < n; ++v) {
    const std::int64_t k = t.subtree_size(v);
    best = std::max(best, k * (n - k));
  }
  return best;
}

}  // namespace routegap
