#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "routegap/graph.hpp"
#include "routegap/rational.hpp"

namespace routegap {

/// Oriented trail: a vertex sequence whose consecutive vertices are adjacent
/// and whose undirected edges are pairwise distinct. Repeated vertices are
/// allowed, repeated edges are not.
struct Path {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  bool empty() const { return vertices.empty(); }
  int source() const { return vertices.front(); }
  int target() const { return vertices.back(); }

  friend bool operator==(const Path&, const Path&) = default;
};

/// One canonical oriented path per ordered vertex pair (x, y), x != y.
/// Pairs may be left unset while a routing is being assembled; validate()
/// reports them as missing.
class Routing {
public:
  Routing() = default;  // empty placeholder; assign a real one before use
  explicit Routing(int vertex_count)
      : n_(vertex_count),
        paths_(static_cast<std::size_t>(vertex_count) * vertex_count) {}

  int vertex_count() const { return n_; }

  const Path& path(int x, int y) const { return paths_[index(x, y)]; }
  bool has_path(int x, int y) const { return !paths_[index(x, y)].empty(); }

  /// Stores p as the canonical path for (p.source(), p.target()).
  void set_path(Path p);

  friend bool operator==(const Routing&, const Routing&) = default;

private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(x) * n_ + y;
  }
  int n_ = 0;
  std::vector<Path> paths_;
};

struct RoutingViolation {
  enum class Kind { missing_pair, endpoint_mismatch, not_adjacent, repeated_edge };
  Kind kind;
  int x, y;  // the offending ordered pair
  std::string detail;
};

std::string to_string(const RoutingViolation& v);

/// Checks both routing invariants against the host graph: every ordered pair
/// carries exactly one path from x to y, every step is an edge of g, and no
/// path repeats an undirected edge. Violations are data, not errors.
std::vector<RoutingViolation> validate(const Graph& g, const Routing& r);
bool is_valid(const Graph& g, const Routing& r);

/// Longest canonical path length.
std::int64_t gamma_star(const Routing& r);

/// Bottleneck number: max over directed edges of the number of paths
/// traversing that edge in that direction.
std::int64_t bottleneck(const Routing& r);

/// Like the bottleneck number but per undirected edge, counting traversals
/// in either direction.
std::int64_t forwarding_index(const Routing& r);

/// M: the sum of all canonical path lengths.
std::int64_t total_length(const Routing& r);

/// Mean path length over all n^2 ordered pairs, the n empty diagonal paths
/// included. Exact by construction: M / n^2.
Rational average_length(const Routing& r);

/// Pigeonhole floor on the bottleneck number: ceil(M / 2|E|).
std::int64_t bottleneck_floor(const Graph& g, const Routing& r);

/// Parses the routing text format: one "x y : v0 v1 ... vm" line per ordered
/// pair, '#' comments ignored. Structural problems (bad syntax, ids out of
/// range, duplicate pairs) throw ParseError; semantic problems (missing
/// pairs, invalid paths) are left to validate().
Routing parse_routing(int vertex_count, std::string_view text);

/// Serializes in the format parse_routing accepts, pairs in ascending order.
std::string to_text(const Routing& r);

}  // namespace routegap
