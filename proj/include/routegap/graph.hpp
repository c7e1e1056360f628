#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "routegap/errors.hpp"

namespace routegap {

/// Simple connected undirected unweighted graph over dense 0-based vertex
/// ids. Immutable once constructed; construction rejects self-loops,
/// duplicate edges, and disconnected inputs.
class Graph {
public:
  /// Builds from an explicit vertex count and edge list.
  static Graph from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges);

  /// Parses the edge-list text format: one "u v" pair per line, '#' comments
  /// and blank lines ignored, vertex count inferred as 1 + max id.
  static Graph from_edge_list(std::string_view text);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  std::int64_t edge_count() const { return edge_count_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const;
  bool has_edge(int u, int v) const;

  /// Edges as (u, v) pairs with u < v, ascending.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

private:
  Graph() = default;
  std::vector<std::vector<int>> adjacency_;
  std::int64_t edge_count_ = 0;
};

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);

/// Erdős–Rényi draw followed by random cross-component edges until
/// connected. Deterministic for a fixed seed.
Graph random_connected_graph(int n, double edge_probability, std::uint64_t seed);

/// Uniform random parent attachment: vertex v picks a parent in [0, v).
Graph random_tree(int n, std::uint64_t seed);

bool is_complete(const Graph& g);
bool is_tree(const Graph& g);

/// BFS distances from source, neighbors scanned in ascending id order.
std::vector<int> bfs_distances(const Graph& g, int source);
int diameter(const Graph& g);

/// Serializes to the edge-list text format parsed by Graph::from_edge_list.
std::string to_edge_list(const Graph& g);

}  // namespace routegap
