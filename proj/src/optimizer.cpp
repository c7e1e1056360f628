#include "routegap/optimizer.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "routegap/constructions.hpp"
#include "routegap/errors.hpp"
#include "routegap/rng.hpp"

namespace routegap {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

bool bottleneck_like(Objective o) {
  return o == Objective::bottleneck || o == Objective::cheeger;
}

std::int64_t surrogate(Objective o, std::int64_t gs, std::int64_t b) {
  return bottleneck_like(o) ? b : gs * b;
}

double bound_from_surrogate(const Graph& g, Objective o, std::int64_t value) {
  const double e = static_cast<double>(g.edge_count());
  const double d = static_cast<double>(g.max_degree());
  switch (o) {
    case Objective::poincare:
      return 1.0 - 2.0 * e / (d * d * static_cast<double>(value));
    case Objective::cheeger:
      return 1.0 - e * e / (2.0 * d * d * d * d * static_cast<double>(value) *
                            static_cast<double>(value));
    default:
      return static_cast<double>(value);
  }
}

/// Incremental gamma_star / bottleneck / total length for a mutable routing.
/// Histograms over edge loads and path lengths make removals O(path length).
class RoutingStats {
 public:
  explicit RoutingStats(int n)
      : n_(n),
        counts_(static_cast<std::size_t>(n) * n, 0),
        count_hist_(static_cast<std::size_t>(n) * n + 2, 0),
        len_hist_(static_cast<std::size_t>(n), 0) {}

  void apply(const Path& p) {
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
      const std::size_t idx =
          static_cast<std::size_t>(p.vertices[i]) * n_ + p.vertices[i + 1];
      const std::int32_t c = counts_[idx]++;
      if (c > 0) --count_hist_[c];
      ++count_hist_[c + 1];
      if (c + 1 > b_) b_ = c + 1;
    }
    const int len = p.length();
    ++len_hist_[len];
    if (len > gs_) gs_ = len;
    m_ += len;
  }

  void remove(const Path& p) {
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
      const std::size_t idx =
          static_cast<std::size_t>(p.vertices[i]) * n_ + p.vertices[i + 1];
      const std::int32_t c = counts_[idx]--;
      --count_hist_[c];
      if (c - 1 > 0) ++count_hist_[c - 1];
    }
    while (b_ > 0 && count_hist_[b_] == 0) --b_;
    const int len = p.length();
    --len_hist_[len];
    while (gs_ > 0 && len_hist_[gs_] == 0) --gs_;
    m_ -= len;
  }

  std::int64_t bottleneck() const { return b_; }
  std::int64_t gamma_star() const { return gs_; }
  std::int64_t total_length() const { return m_; }

 private:
  int n_;
  std::vector<std::int32_t> counts_;
  std::vector<std::int32_t> count_hist_;
  std::vector<std::int32_t> len_hist_;
  std::int64_t b_ = 0;
  std::int64_t gs_ = 0;
  std::int64_t m_ = 0;
};

struct PairSlot {
  int x = 0;
  int y = 0;
  int dist = 0;
  std::vector<Path> candidates;
};

/// Depth-first product search over per-pair candidate lists. best_value
/// starts at the incumbent's value and only complete assignments strictly
/// below it replace the incumbent, so the returned minimum is exact.
class ProductSearch {
 public:
  ProductSearch(const Graph& g, Objective obj, std::vector<PairSlot> slots,
                Routing incumbent, std::int64_t b_cap)
      : g_(g),
        obj_(obj),
        slots_(std::move(slots)),
        stats_(g.vertex_count()),
        best_(std::move(incumbent)),
        b_cap_(b_cap) {
    const std::size_t k = slots_.size();
    suffix_dist_sum_.assign(k + 1, 0);
    suffix_dist_max_.assign(k + 1, 0);
    for (std::size_t i = k; i-- > 0;) {
      suffix_dist_sum_[i] = suffix_dist_sum_[i + 1] + slots_[i].dist;
      suffix_dist_max_[i] = std::max(suffix_dist_max_[i + 1], slots_[i].dist);
    }
    best_value_ = surrogate(obj_, gamma_star(best_), bottleneck(best_));
  }

  SearchResult run() {
    descend(0);
    SearchResult result;
    result.routing = best_;
    result.objective = obj_;
    result.integer_value = best_value_;
    result.objective_value = bound_from_surrogate(g_, obj_, best_value_);
    result.optimal = true;
    result.evaluations = leaves_;
    return result;
  }

 private:
  std::int64_t lower_bound(std::size_t k) const {
    const std::int64_t pending = stats_.total_length() + suffix_dist_sum_[k];
    std::int64_t lb_b = std::max<std::int64_t>(
        stats_.bottleneck(), ceil_div(pending, 2 * g_.edge_count()));
    lb_b = std::max<std::int64_t>(lb_b, 1);
    if (bottleneck_like(obj_)) return lb_b;
    const std::int64_t lb_gs = std::max<std::int64_t>(
        std::max<std::int64_t>(stats_.gamma_star(), suffix_dist_max_[k]), 1);
    return lb_gs * lb_b;
  }

  void descend(std::size_t k) {
    if (b_cap_ >= 0 && stats_.bottleneck() > b_cap_) return;
    if (lower_bound(k) >= best_value_) return;
    if (k == slots_.size()) {
      ++leaves_;
      const std::int64_t value =
          surrogate(obj_, stats_.gamma_star(), stats_.bottleneck());
      if (value < best_value_) {
        best_value_ = value;
        for (std::size_t i = 0; i < slots_.size(); ++i) {
          best_.set_path(chosen_[i]);
        }
      }
      return;
    }
    for (const Path& cand : slots_[k].candidates) {
      stats_.apply(cand);
      chosen_.push_back(cand);
      descend(k + 1);
      chosen_.pop_back();
      stats_.remove(cand);
    }
  }

  const Graph& g_;
  Objective obj_;
  std::vector<PairSlot> slots_;
  std::vector<std::int64_t> suffix_dist_sum_;
  std::vector<int> suffix_dist_max_;
  RoutingStats stats_;
  std::vector<Path> chosen_;
  Routing best_;
  std::int64_t best_value_ = 0;
  std::int64_t b_cap_ = -1;
  std::int64_t leaves_ = 0;
};

std::vector<PairSlot> build_slots(const Graph& g, const SearchLimits& limits) {
  const int n = g.vertex_count();
  std::vector<PairSlot> slots;
  slots.reserve(static_cast<std::size_t>(n) * (n - 1));
  std::int64_t total = 0;
  for (int x = 0; x < n; ++x) {
    const std::vector<int> dist = bfs_distances(g, x);
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      PairSlot slot;
      slot.x = x;
      slot.y = y;
      slot.dist = dist[y];
      slot.candidates =
          enumerate_simple_paths(g, x, y, n - 1, limits.max_total_paths - total);
      total += static_cast<std::int64_t>(slot.candidates.size());
      slots.push_back(std::move(slot));
    }
  }
  return slots;
}

}  // namespace

Objective objective_from_name(const std::string& name) {
  if (name == "gamma-b") return Objective::gamma_star_times_b;
  if (name == "b" || name == "bottleneck") return Objective::bottleneck;
  if (name == "poincare") return Objective::poincare;
  if (name == "cheeger") return Objective::cheeger;
  throw ParseError("unknown objective '" + name +
                   "' (expected gamma-b, b, poincare, or cheeger)");
}

std::string to_string(Objective o) {
  switch (o) {
    case Objective::gamma_star_times_b:
      return "gamma-b";
    case Objective::bottleneck:
      return "bottleneck";
    case Objective::poincare:
      return "poincare";
    case Objective::cheeger:
      return "cheeger";
  }
  return "?";
}

std::vector<Path> enumerate_simple_paths(const Graph& g, int x, int y, int max_length,
                                         std::int64_t max_count, bool truncate) {
  std::vector<Path> out;
  std::vector<bool> on_path(g.vertex_count(), false);
  std::vector<int> current{x};
  on_path[x] = true;

  // Iterative DFS in ascending neighbor order emits vertex sequences in
  // lexicographic order; the stable sort below then groups by length.
  struct Frame {
    int vertex;
    std::size_t next;
  };
  std::vector<Frame> stack{{x, 0}};
  while (!stack.empty()) {
    Frame& top = stack.back();
    const std::vector<int>& nbrs = g.neighbors(top.vertex);
    if (top.next >= nbrs.size()) {
      on_path[top.vertex] = false;
      current.pop_back();
      stack.pop_back();
      continue;
    }
    const int next = nbrs[top.next++];
    if (on_path[next]) continue;
    if (next == y) {
      if (static_cast<int>(current.size()) <= max_length) {
        if (static_cast<std::int64_t>(out.size()) >= max_count) {
          if (truncate) break;
          throw LimitError("simple path enumeration exceeded the budget of " +
                           std::to_string(max_count) + " paths");
        }
        Path p;
        p.vertices = current;
        p.vertices.push_back(y);
        out.push_back(std::move(p));
      }
      continue;
    }
    if (static_cast<int>(current.size()) >= max_length) continue;
    on_path[next] = true;
    current.push_back(next);
    stack.push_back({next, 0});
  }

  std::stable_sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
    return a.length() < b.length();
  });
  return out;
}

SearchResult enumerate_optimal(const Graph& g, Objective obj,
                               const SearchLimits& limits) {
  if (g.vertex_count() > limits.max_vertices) {
    throw LimitError("exhaustive search is limited to " +
                     std::to_string(limits.max_vertices) +
                     " vertices (got " + std::to_string(g.vertex_count()) +
                     "); use local search instead");
  }
  ProductSearch search(g, obj, build_slots(g, limits), geodesic_routing(g), -1);
  return search.run();
}

SearchResult local_search(const Graph& g, Objective obj, std::uint64_t seed,
                          std::int64_t max_iters) {
  const int n = g.vertex_count();
  Routing r = geodesic_routing(g);
  RoutingStats stats(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y) stats.apply(r.path(x, y));
    }
  }

  std::vector<std::pair<int, int>> order;
  order.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y) order.emplace_back(x, y);
    }
  }

  Rng rng(seed);
  std::int64_t current = surrogate(obj, stats.gamma_star(), stats.bottleneck());
  std::int64_t moves = 0;
  std::int64_t tried = 0;
  bool improved = true;
  while (improved && moves < max_iters) {
    improved = false;
    rng.shuffle(order);
    for (const auto& [x, y] : order) {
      const int cap = static_cast<int>(
          std::min<std::int64_t>(stats.gamma_star() + 2, n - 1));
      const std::vector<Path> cands =
          enumerate_simple_paths(g, x, y, cap, 200'000, /*truncate=*/true);
      const Path before = r.path(x, y);
      for (const Path& cand : cands) {
        if (cand == before) continue;
        ++tried;
        stats.remove(before);
        stats.apply(cand);
        const std::int64_t value =
            surrogate(obj, stats.gamma_star(), stats.bottleneck());
        if (value < current) {
          r.set_path(cand);
          current = value;
          ++moves;
          improved = true;
          break;
        }
        stats.remove(cand);
        stats.apply(before);
      }
      if (moves >= max_iters) break;
    }
  }

  SearchResult result;
  result.routing = std::move(r);
  result.objective = obj;
  result.integer_value = current;
  result.objective_value = bound_from_surrogate(g, obj, current);
  result.optimal = false;
  result.evaluations = tried;
  return result;
}

OptimalComparison optimal_bound_comparison(const Graph& g,
                                           const SearchLimits& limits) {
  if (g.vertex_count() > limits.max_vertices) {
    throw LimitError("exhaustive search is limited to " +
                     std::to_string(limits.max_vertices) +
                     " vertices (got " + std::to_string(g.vertex_count()) +
                     "); use local search instead");
  }
  std::vector<PairSlot> slots = build_slots(g, limits);

  ProductSearch gb_search(g, Objective::gamma_star_times_b, slots,
                          geodesic_routing(g), -1);
  const SearchResult gb = gb_search.run();
  ProductSearch b_search(g, Objective::bottleneck, slots, geodesic_routing(g), -1);
  const SearchResult bres = b_search.run();

  // Re-minimize gamma_star * b among routings whose bottleneck already equals
  // the unconstrained minimum; if the constrained optimum matches the
  // unconstrained one, a single routing attains both minima.
  ProductSearch joint_search(g, Objective::gamma_star_times_b, std::move(slots),
                             bres.routing, bres.integer_value);
  const SearchResult joint = joint_search.run();

  OptimalComparison cmp;
  cmp.min_gamma_b = gb.integer_value;
  cmp.min_b = bres.integer_value;
  cmp.best_poincare =
      bound_from_surrogate(g, Objective::poincare, gb.integer_value);
  cmp.best_cheeger = bound_from_surrogate(g, Objective::cheeger, bres.integer_value);
  cmp.single_routing_attains_both = joint.integer_value == gb.integer_value;
  cmp.gamma_star_at_optimum = gamma_star(gb.routing);
  cmp.diameter = diameter(g);
  cmp.evaluations = gb.evaluations + bres.evaluations + joint.evaluations;

  // Poincare beats Cheeger iff 1 - 2E/(d^2 P) >= 1 - E^2/(2 d^4 B^2), i.e.
  // 4 d^2 B^2 >= E P with P = min gamma*b and B = min b. Exact in integers.
  const std::int64_t d = g.max_degree();
  const std::int64_t lhs = 4 * d * d * cmp.min_b * cmp.min_b;
  const std::int64_t rhs = g.edge_count() * cmp.min_gamma_b;
  cmp.winner = lhs > rhs  ? Winner::poincare
               : lhs == rhs ? Winner::tie
                            : Winner::cheeger;
  return cmp;
}

}  // namespace routegap
