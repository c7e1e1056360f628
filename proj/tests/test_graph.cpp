#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "routegap/errors.hpp"
#include "routegap/graph.hpp"

using namespace routegap;

TEST_CASE("standard families have the expected shape") {
  const Graph k5 = complete_graph(5);
  CHECK(k5.vertex_count() == 5);
  CHECK(k5.edge_count() == 10);
  CHECK(k5.max_degree() == 4);
  CHECK(diameter(k5) == 1);
  CHECK(is_complete(k5));
  CHECK_FALSE(is_tree(k5));

  const Graph p4 = path_graph(4);
  CHECK(p4.edge_count() == 3);
  CHECK(p4.degree(0) == 1);
  CHECK(p4.degree(1) == 2);
  CHECK(diameter(p4) == 3);
  CHECK(is_tree(p4));

  const Graph c6 = cycle_graph(6);
  CHECK(c6.edge_count() == 6);
  CHECK(c6.max_degree() == 2);
  CHECK(diameter(c6) == 3);
  CHECK_FALSE(is_tree(c6));

  const Graph s7 = star_graph(7);
  CHECK(s7.edge_count() == 6);
  CHECK(s7.degree(0) == 6);
  CHECK(s7.max_degree() == 6);
  CHECK(diameter(s7) == 2);
  CHECK(is_tree(s7));

  // K_2 is simultaneously complete, a path, and a tree.
  const Graph k2 = complete_graph(2);
  CHECK(is_complete(k2));
  CHECK(is_tree(k2));
  CHECK(diameter(k2) == 1);
}

TEST_CASE("family size preconditions") {
  CHECK_THROWS_AS(complete_graph(1), std::invalid_argument);
  CHECK_THROWS_AS(path_graph(1), std::invalid_argument);
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
  CHECK_THROWS_AS(star_graph(1), std::invalid_argument);
}

TEST_CASE("edge list parsing accepts comments and blank lines") {
  const Graph g = Graph::from_edge_list(
      "# a triangle plus a pendant\n"
      "0 1\n"
      "1 2\n\n"
      "0 2   # closing edge\n"
      "2 3\n");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(2, 0));
  CHECK_FALSE(g.has_edge(0, 3));
  CHECK(g.neighbors(2) == std::vector<int>{0, 1, 3});
}

TEST_CASE("edge list parsing rejects malformed input") {
  CHECK_THROWS_AS(Graph::from_edge_list(""), ParseError);
  CHECK_THROWS_AS(Graph::from_edge_list("# only comments\n"), ParseError);
  CHECK_THROWS_AS(Graph::from_edge_list("0 1\n1 x\n"), ParseError);
  CHECK_THROWS_AS(Graph::from_edge_list("0 1 2\n"), ParseError);
  CHECK_THROWS_AS(Graph::from_edge_list("0\n"), ParseError);
  CHECK_THROWS_AS(Graph::from_edge_list("0 0\n"), ParseError);       // self-loop
  CHECK_THROWS_AS(Graph::from_edge_list("0 1\n1 0\n"), ParseError);  // duplicate
  CHECK_THROWS_AS(Graph::from_edge_list("0 1\n-1 1\n"), ParseError);
  CHECK_THROWS_AS(Graph::from_edge_list("0 1\n2 3\n"), ParseError);  // disconnected
}

TEST_CASE("parse errors carry the offending location") {
  try {
    Graph::from_edge_list("0 1\n1 one\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("serialization round-trips") {
  const Graph g = cycle_graph(5);
  const Graph back = Graph::from_edge_list(to_edge_list(g));
  CHECK(g == back);

  // edges() is sorted ascending with u < v
  const auto edges = g.edges();
  for (const auto& [u, v] : edges) CHECK(u < v);
  CHECK(std::is_sorted(edges.begin(), edges.end()));
}

TEST_CASE("bfs distances and diameter") {
  const Graph g = path_graph(5);
  CHECK(bfs_distances(g, 0) == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(bfs_distances(g, 2) == std::vector<int>{2, 1, 0, 1, 2});
  CHECK(diameter(g) == 4);

  const Graph k4 = complete_graph(4);
  CHECK(bfs_distances(k4, 1) == std::vector<int>{1, 0, 1, 1});
}

TEST_CASE("from_edges validates like the parser") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}}), ParseError);          // disconnected
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1}, {0, 1}}), ParseError);  // duplicate
  CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), ParseError);          // out of range
  const Graph g = Graph::from_edges(3, {{2, 0}, {0, 1}});
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 2));
}

TEST_CASE("random connected graphs are connected, simple, and seeded") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_connected_graph(8, 0.3, seed);
    CHECK(g.vertex_count() == 8);
    const auto dist = bfs_distances(g, 0);
    for (const int d : dist) CHECK(d >= 0);  // every vertex reached
    std::set<std::pair<int, int>> seen;
    for (const auto& e : g.edges()) CHECK(seen.insert(e).second);
  }
  CHECK(random_connected_graph(8, 0.3, 7) == random_connected_graph(8, 0.3, 7));
  CHECK(random_connected_graph(8, 0.3, 7) != random_connected_graph(8, 0.3, 8));
}

TEST_CASE("random trees are trees and seeded") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph t = random_tree(6, seed);
    CHECK(t.vertex_count() == 6);
    CHECK(t.edge_count() == 5);
    CHECK(is_tree(t));
  }
  CHECK(random_tree(9, 3) == random_tree(9, 3));
}

TEST_CASE("extreme probabilities still give connected graphs") {
  CHECK(random_connected_graph(6, 0.0, 1).edge_count() == 5);  // spanning tree only
  CHECK(random_connected_graph(6, 1.0, 1).edge_count() == 15);
  CHECK(is_complete(random_connected_graph(6, 1.0, 2)));
}
