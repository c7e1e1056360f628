#include "routegap/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "routegap/rng.hpp"

namespace routegap {
namespace {

void check_connected(const std::vector<std::vector<int>>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  std::vector<char> seen(n, 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int w : adjacency[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        frontier.push(w);
      }
    }
  }
  if (reached != n) {
    int missing = 0;
    while (seen[missing]) ++missing;
    throw ParseError("graph is disconnected: vertex " + std::to_string(missing) +
                     " is not reachable from vertex 0");
  }
}

}  // namespace

Graph Graph::from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  if (vertex_count < 2) throw ParseError("graph needs at least 2 vertices");
  if (edges.empty()) throw ParseError("graph has no edges");
  Graph g;
  g.adjacency_.resize(vertex_count);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw ParseError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") out of range");
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (int v = 0; v < vertex_count; ++v) {
    auto& nbrs = g.adjacency_[v];
    std::sort(nbrs.begin(), nbrs.end());
    const auto dup = std::adjacent_find(nbrs.begin(), nbrs.end());
    if (dup != nbrs.end())
      throw ParseError("duplicate edge (" + std::to_string(v) + ", " +
                       std::to_string(*dup) + ")");
  }
  g.edge_count_ = static_cast<std::int64_t>(edges.size());
  check_connected(g.adjacency_);
  return g;
}

Graph Graph::from_edge_list(std::string_view text) {
  std::vector<std::pair<int, int>> edges;
  int max_id = -1;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    long long u = 0, v = 0;
    if (!(fields >> u)) continue;  // blank line
    std::string trailing;
    if (!(fields >> v) || (fields >> trailing))
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected two vertex ids, got '" + line + "'");
    if (u < 0 || v < 0 || u > 1'000'000 || v > 1'000'000)
      throw ParseError("line " + std::to_string(line_no) + ": vertex id out of range");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_id = std::max({max_id, static_cast<int>(u), static_cast<int>(v)});
  }
  if (edges.empty()) throw ParseError("empty edge list");
  return from_edges(max_id + 1, edges);
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& nbrs : adjacency_) d = std::max(d, static_cast<int>(nbrs.size()));
  return d;
}

bool Graph::has_edge(int u, int v) const {
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph complete_graph(int n) {
  if (n < 2) throw std::invalid_argument("complete_graph: n must be >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
  if (n < 2) throw std::invalid_argument("path_graph: n must be >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  edges.emplace_back(0, n - 1);
  return Graph::from_edges(n, edges);
}

Graph star_graph(int n) {
  if (n < 2) throw std::invalid_argument("star_graph: n must be >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(n, edges);
}

Graph random_connected_graph(int n, double edge_probability, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_connected_graph: n must be >= 2");
  if (edge_probability < 0.0 || edge_probability > 1.0)
    throw std::invalid_argument("random_connected_graph: probability outside [0, 1]");
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(edge_probability)) edges.emplace_back(u, v);

  // Union-find over the sampled edges; join distinct components with
  // uniformly sampled cross pairs until one component remains.
  std::vector<int> root(n);
  for (int v = 0; v < n; ++v) root[v] = v;
  auto find = [&](int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  int components = n;
  for (const auto& [u, v] : edges) {
    const int ru = find(u), rv = find(v);
    if (ru != rv) {
      root[ru] = rv;
      --components;
    }
  }
  while (components > 1) {
    const int u = static_cast<int>(rng.uniform_int(0, n - 1));
    const int v = static_cast<int>(rng.uniform_int(0, n - 1));
    if (find(u) == find(v)) continue;
    edges.emplace_back(u, v);
    root[find(u)] = find(v);
    --components;
  }
  return Graph::from_edges(n, edges);
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_tree: n must be >= 2");
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v)
    edges.emplace_back(static_cast<int>(rng.uniform_int(0, v - 1)), v);
  return Graph::from_edges(n, edges);
}

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  return g.edge_count() == n * (n - 1) / 2;
}

bool is_tree(const Graph& g) { return g.edge_count() == g.vertex_count() - 1; }

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

int diameter(const Graph& g) {
  int diam = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto dist = bfs_distances(g, v);
    diam = std::max(diam, *std::max_element(dist.begin(), dist.end()));
  }
  return diam;
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

}  // namespace routegap
