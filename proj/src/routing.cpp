#include "routegap/routing.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace routegap {
namespace {

// Directed edge (u, v) -> slot in a dense n*n counter table.
std::size_t slot(int u, int v, int n) {
  return static_cast<std::size_t>(u) * n + v;
}

}  // namespace

void Routing::set_path(Path p) {
  if (p.vertices.size() < 2)
    throw std::invalid_argument("Routing::set_path: path needs at least two vertices");
  const int x = p.source(), y = p.target();
  if (x == y) throw std::invalid_argument("Routing::set_path: endpoints must differ");
  if (x < 0 || y < 0 || x >= n_ || y >= n_)
    throw std::invalid_argument("Routing::set_path: endpoint out of range");
  paths_[index(x, y)] = std::move(p);
}

std::string to_string(const RoutingViolation& v) {
  const std::string pair = "(" + std::to_string(v.x) + ", " + std::to_string(v.y) + ")";
  switch (v.kind) {
    case RoutingViolation::Kind::missing_pair:
      return "missing pair " + pair;
    case RoutingViolation::Kind::endpoint_mismatch:
      return "pair " + pair + ": " + v.detail;
    case RoutingViolation::Kind::not_adjacent:
      return "pair " + pair + ": step " + v.detail + " is not an edge";
    case RoutingViolation::Kind::repeated_edge:
      return "pair " + pair + ": repeated edge " + v.detail;
  }
  return "unknown violation";
}

std::vector<RoutingViolation> validate(const Graph& g, const Routing& r) {
  std::vector<RoutingViolation> out;
  const int n = g.vertex_count();
  if (r.vertex_count() != n) {
    out.push_back({RoutingViolation::Kind::missing_pair, -1, -1,
                   "vertex count mismatch"});
    return out;
  }
  std::unordered_set<std::size_t> edges_seen;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      if (!r.has_path(x, y)) {
        out.push_back({RoutingViolation::Kind::missing_pair, x, y, ""});
        continue;
      }
      const Path& p = r.path(x, y);
      if (p.source() != x || p.target() != y) {
        out.push_back({RoutingViolation::Kind::endpoint_mismatch, x, y,
                       "path runs " + std::to_string(p.source()) + " -> " +
                           std::to_string(p.target())});
        continue;
      }
      edges_seen.clear();
      for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
        const int u = p.vertices[i], v = p.vertices[i + 1];
        const std::string step =
            "{" + std::to_string(u) + ", " + std::to_string(v) + "}";
        if (u < 0 || v < 0 || u >= n || v >= n || !g.has_edge(u, v)) {
          out.push_back({RoutingViolation::Kind::not_adjacent, x, y, step});
          continue;
        }
        const auto key = slot(std::min(u, v), std::max(u, v), n);
        if (!edges_seen.insert(key).second)
          out.push_back({RoutingViolation::Kind::repeated_edge, x, y, step});
      }
    }
  }
  return out;
}

bool is_valid(const Graph& g, const Routing& r) { return validate(g, r).empty(); }

std::int64_t gamma_star(const Routing& r) {
  std::int64_t longest = 0;
  const int n = r.vertex_count();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && r.has_path(x, y))
        longest = std::max<std::int64_t>(longest, r.path(x, y).length());
  return longest;
}

std::int64_t bottleneck(const Routing& r) {
  const int n = r.vertex_count();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || !r.has_path(x, y)) continue;
      const auto& verts = r.path(x, y).vertices;
      for (std::size_t i = 0; i + 1 < verts.size(); ++i)
        ++counts[slot(verts[i], verts[i + 1], n)];
    }
  }
  return *std::max_element(counts.begin(), counts.end());
}

std::int64_t forwarding_index(const Routing& r) {
  const int n = r.vertex_count();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || !r.has_path(x, y)) continue;
      const auto& verts = r.path(x, y).vertices;
      for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
        const int u = std::min(verts[i], verts[i + 1]);
        const int v = std::max(verts[i], verts[i + 1]);
        ++counts[slot(u, v, n)];
      }
    }
  }
  return *std::max_element(counts.begin(), counts.end());
}

std::int64_t total_length(const Routing& r) {
  std::int64_t sum = 0;
  const int n = r.vertex_count();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && r.has_path(x, y)) sum += r.path(x, y).length();
  return sum;
}

Rational average_length(const Routing& r) {
  const auto n = static_cast<std::int64_t>(r.vertex_count());
  return Rational(total_length(r), n * n);
}

std::int64_t bottleneck_floor(const Graph& g, const Routing& r) {
  const std::int64_t m = total_length(r);
  const std::int64_t oriented = 2 * g.edge_count();
  return (m + oriented - 1) / oriented;
}

Routing parse_routing(int vertex_count, std::string_view text) {
  Routing r(vertex_count);
  std::vector<char> assigned(static_cast<std::size_t>(vertex_count) * vertex_count, 0);
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("line " + std::to_string(line_no) + ": expected 'x y : v0 ... vm'");
    std::istringstream head(line.substr(0, colon));
    int x = 0, y = 0;
    std::string trailing;
    if (!(head >> x >> y) || (head >> trailing))
      throw ParseError("line " + std::to_string(line_no) + ": malformed pair header");
    if (x < 0 || y < 0 || x >= vertex_count || y >= vertex_count || x == y)
      throw ParseError("line " + std::to_string(line_no) + ": bad ordered pair (" +
                       std::to_string(x) + ", " + std::to_string(y) + ")");
    std::istringstream tail(line.substr(colon + 1));
    Path p;
    int v = 0;
    while (tail >> v) {
      if (v < 0 || v >= vertex_count)
        throw ParseError("line " + std::to_string(line_no) + ": vertex id " +
                         std::to_string(v) + " out of range");
      p.vertices.push_back(v);
    }
    if (!tail.eof())
      throw ParseError("line " + std::to_string(line_no) + ": non-numeric path entry");
    if (p.vertices.size() < 2)
      throw ParseError("line " + std::to_string(line_no) + ": path needs at least two vertices");
    if (p.source() != x || p.target() != y)
      throw ParseError("line " + std::to_string(line_no) +
                       ": path endpoints disagree with the pair header");
    auto& seen = assigned[static_cast<std::size_t>(x) * vertex_count + y];
    if (seen)
      throw ParseError("line " + std::to_string(line_no) + ": duplicate pair (" +
                       std::to_string(x) + ", " + std::to_string(y) + ")");
    seen = 1;
    r.set_path(std::move(p));
  }
  return r;
}

std::string to_text(const Routing& r) {
  std::string out;
  const int n = r.vertex_count();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y || !r.has_path(x, y)) continue;
      out += std::to_string(x);
      out += ' ';
      out += std::to_string(y);
      out += " :";
      for (int v : r.path(x, y).vertices) {
        out += ' ';
        out += std::to_string(v);
      }
      out += '\n';
    }
  }
  return out;
}

}  // namespace routegap
