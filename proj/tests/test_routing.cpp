#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "oracles.hpp"
#include "routegap/constructions.hpp"
#include "routegap/errors.hpp"
#include "routegap/graph.hpp"
#include "routegap/rational.hpp"
#include "routegap/routing.hpp"

using namespace routegap;

namespace {

Routing p3_geodesics() {
  return geodesic_routing(path_graph(3));
}

}  // namespace

TEST_CASE("rational arithmetic is exact and normalized") {
  CHECK(Rational(287, 289).str() == "287/289");
  CHECK(Rational(4, 8) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, 5).str() == "0/1");
  CHECK(Rational(1, 3) < Rational(2, 5));
  CHECK(Rational(7, 2) * 4 == Rational(14));
  CHECK(Rational::parse("287/289") == Rational(287, 289));
  CHECK(Rational::parse("-5") == Rational(-5, 1));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x/2"), std::invalid_argument);

  // cross-multiplied comparison survives magnitudes where doubles round
  const Rational big1((std::int64_t{1} << 55) + 1, std::int64_t{1} << 55);
  const Rational big2(1, 1);
  CHECK(big1 > big2);
  CHECK(big1.value() == 1.0);  // the double rounds; the comparison did not
}

TEST_CASE("path statistics on hand-computed geodesics of P_3") {
  // P_3: four length-1 paths plus (0,2) and (2,0) through the middle.
  const Routing r = p3_geodesics();
  CHECK(gamma_star(r) == 2);
  CHECK(total_length(r) == 8);
  CHECK(average_length(r) == Rational(8, 9));
  // directed edge (0,1) carries (0,1) and (0,2); likewise by symmetry
  CHECK(bottleneck(r) == 2);
  // undirected {0,1} carries (0,1), (1,0), (0,2), (2,0)
  CHECK(forwarding_index(r) == 4);
  // floor: ceil(8 / (2*2)) = 2, met with equality
  CHECK(bottleneck_floor(path_graph(3), r) == 2);
  CHECK(bottleneck(r) >= bottleneck_floor(path_graph(3), r));
}

TEST_CASE("set_path validates endpoints") {
  Routing r(3);
  CHECK_THROWS_AS(r.set_path(Path{{0}}), std::invalid_argument);       // too short
  CHECK_THROWS_AS(r.set_path(Path{{0, 0}}), std::invalid_argument);    // x == y
  CHECK_THROWS_AS(r.set_path(Path{{0, 7}}), std::invalid_argument);    // out of range
  r.set_path(Path{{0, 2, 1}});
  CHECK(r.path(0, 1).vertices == std::vector<int>{0, 2, 1});
  CHECK_FALSE(r.has_path(1, 0));
}

TEST_CASE("validate reports each violation kind as data") {
  const Graph g = path_graph(4);  // edges 0-1, 1-2, 2-3

  SUBCASE("missing pairs") {
    Routing r(4);
    const auto violations = validate(g, r);
    CHECK(violations.size() == 12);
    for (const auto& v : violations) {
      CHECK(v.kind == RoutingViolation::Kind::missing_pair);
    }
  }

  SUBCASE("non-adjacent step") {
    Routing r = geodesic_routing(g);
    r.set_path(Path{{0, 2, 3}});  // 0-2 is not an edge of P_4
    const auto violations = validate(g, r);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].kind == RoutingViolation::Kind::not_adjacent);
    CHECK(violations[0].x == 0);
    CHECK(violations[0].y == 3);
    CHECK(to_string(violations[0]).find("(0, 3)") != std::string::npos);
  }

  SUBCASE("repeated undirected edge") {
    const Graph k3 = complete_graph(3);
    Routing r = geodesic_routing(k3);
    r.set_path(Path{{0, 1, 0, 2}});  // walks 0-1 both ways
    const auto violations = validate(k3, r);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].kind == RoutingViolation::Kind::repeated_edge);
  }

  SUBCASE("valid routing has no violations") {
    CHECK(validate(g, geodesic_routing(g)).empty());
    CHECK(is_valid(g, geodesic_routing(g)));
  }
}

TEST_CASE("routing text round-trips") {
  const Graph g = cycle_graph(5);
  const Routing r = geodesic_routing(g);
  const Routing back = parse_routing(5, to_text(r));
  CHECK(back == r);
  CHECK(to_text(back) == to_text(r));
}

TEST_CASE("routing parser rejects structural problems") {
  CHECK_THROWS_AS(parse_routing(3, "0 1 0 1\n"), ParseError);       // no colon
  CHECK_THROWS_AS(parse_routing(3, "0 1 : 0 x\n"), ParseError);     // bad token
  CHECK_THROWS_AS(parse_routing(3, "0 5 : 0 5\n"), ParseError);     // pair out of range
  CHECK_THROWS_AS(parse_routing(3, "0 1 : 0 4\n"), ParseError);     // vertex out of range
  CHECK_THROWS_AS(parse_routing(3, "0 1 : 1 0\n"), ParseError);     // endpoints disagree
  CHECK_THROWS_AS(parse_routing(3, "0 0 : 0 0\n"), ParseError);     // diagonal pair
  CHECK_THROWS_AS(parse_routing(3, "0 1 : 0 1\n0 1 : 0 2 1\n"), ParseError);  // duplicate
  // missing pairs are not a parse error; validate() owns that
  const Routing partial = parse_routing(3, "# partial\n0 1 : 0 1\n");
  CHECK(partial.has_path(0, 1));
  CHECK_FALSE(partial.has_path(1, 0));
}

TEST_CASE("statistics agree with map-based recounts on random routings") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Graph g = random_connected_graph(3 + seed % 6, 0.45, seed);
    const Routing r = random_simple_routing(g, seed * 31);
    REQUIRE(is_valid(g, r));
    const oracle::RoutingTally t = oracle::tally(r);
    CHECK(gamma_star(r) == t.gamma_star);
    CHECK(bottleneck(r) == t.bottleneck);
    CHECK(forwarding_index(r) == t.forwarding);
    CHECK(total_length(r) == t.total_length);
    CHECK(average_length(r) ==
          Rational(t.total_length, static_cast<std::int64_t>(g.vertex_count()) *
                                       g.vertex_count()));
    // pigeonhole floor, exact
    const std::int64_t floor = bottleneck_floor(g, r);
    CHECK(floor == (t.total_length + 2 * g.edge_count() - 1) / (2 * g.edge_count()));
    CHECK(bottleneck(r) >= floor);
  }
}

TEST_CASE("forwarding index counts both directions of an undirected edge") {
  // On K_3 route (0,1) directly but (1,0) the long way round. The detour's
  // second hop stacks onto the direct path (2,0), so directed (2,0) carries
  // 2, while the undirected edge {0,2} also absorbs the opposite direction
  // (0,2) for a total of 3.
  const Graph k3 = complete_graph(3);
  Routing r = geodesic_routing(k3);
  r.set_path(Path{{1, 2, 0}});
  CHECK(bottleneck(r) == 2);
  CHECK(forwarding_index(r) == 3);  // strictly above the directed maximum
}
