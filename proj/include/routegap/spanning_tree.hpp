#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "routegap/graph.hpp"
#include "routegap/routing.hpp"

namespace routegap {

/// Spanning tree of a host graph, stored as a parent array rooted at
/// vertex 0. Paths between vertices are the unique tree paths.
class SpanningTree {
public:
  /// Builds from n-1 undirected edges; verifies they lie in the host and
  /// form a spanning tree.
  SpanningTree(const Graph& host, const std::vector<std::pair<int, int>>& tree_edges);

  const Graph& host() const { return host_; }
  int vertex_count() const { return static_cast<int>(parent_.size()); }

  /// parent()[v] is v's parent on the path to vertex 0; parent()[0] == -1.
  const std::vector<int>& parent() const { return parent_; }

  std::vector<std::pair<int, int>> edges() const;

  int degree(int v) const { return static_cast<int>(tree_adjacency_[v].size()); }
  int max_degree() const;

  /// Unique tree path from x to y.
  Path tree_path(int x, int y) const;

  /// Number of vertices on v's side of the edge {v, parent(v)}; defined for
  /// v != 0. Removing that edge cuts the tree into sides of this size and
  /// n minus it.
  int subtree_size(int v) const { return subtree_size_[v]; }

private:
  Graph host_;
  std::vector<std::vector<int>> tree_adjacency_;
  std::vector<int> parent_;
  std::vector<int> depth_;
  std::vector<int> subtree_size_;
};

SpanningTree bfs_tree(const Graph& g, int root);
SpanningTree dfs_tree(const Graph& g, int root);

/// The path 0-1-...-(n-1); host must be complete.
SpanningTree hamiltonian_path_tree(const Graph& g);

/// All spokes incident to hub; host must be complete.
SpanningTree star_tree(const Graph& g, int hub);

/// Depth-first tree from a random root with randomly ordered neighbor
/// visits. Deterministic for a fixed seed.
SpanningTree random_spanning_tree(const Graph& g, std::uint64_t seed);

/// Max over tree edges of the directed cut product k(n-k), where deleting
/// the edge leaves sides of k and n-k vertices. For the unique routing of a
/// tree this equals its bottleneck number.
std::int64_t cut_product_bottleneck(const SpanningTree& t);

}  // namespace routegap
