#include <catch_amalgamated.hpp>

#include "toriclass/classgroup.hpp"
#include "toriclass/graph.hpp"
#include "toriclass/poset.hpp"

using namespace toriclass;

namespace {

Poset chain(int n) {
  std::vector<std::pair<int, int>> rels;
  for (int i = 0; i + 1 < n; ++i) rels.push_back({i, i + 1});
  return Poset::from_relations(n, rels);
}

Poset antichain(int n) { return Poset::from_relations(n, {}); }

Poset x_shape() { return poset_family(PosetFamily::pi4, {1, 1, 1, 1}); }

Poset x_shape_plus_point() {
  // 0,1 < 2 < 3,4 together with an isolated element 5
  return Poset::from_relations(6, {{0, 2}, {1, 2}, {2, 3}, {2, 4}});
}

}  // namespace

TEST_CASE("poset construction") {
  SECTION("covers are irredundant") {
    Poset p = Poset::from_relations(3, {{0, 1}, {1, 2}, {0, 2}});
    REQUIRE(p.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  }
  SECTION("cycles rejected") {
    REQUIRE_THROWS_AS(Poset::from_relations(2, {{0, 1}, {1, 0}}), BadParams);
  }
  SECTION("ideal and antichain counts") {
    REQUIRE(chain(3).ideals().size() == 4);
    REQUIRE(antichain(3).ideals().size() == 8);
    REQUIRE(chain(3).antichains().size() == 4);
    REQUIRE(x_shape().ideals().size() == 8);
    REQUIRE(x_shape_plus_point().ideals().size() == 16);
  }
}

TEST_CASE("poset families") {
  SECTION("Pi1(1,1) is a 2-antichain") {
    Poset p = poset_family(PosetFamily::pi1, {1, 1});
    REQUIRE(p.size() == 2);
    REQUIRE(p.covers().empty());
  }
  SECTION("Pi4(1,1,1,1) is the five-element X") {
    Poset p = x_shape();
    REQUIRE(p.size() == 5);
    REQUIRE(p.covers().size() == 4);
    REQUIRE(contains_x_shape(p));
  }
  SECTION("Pi3(1,1,1,1,0) degenerates to a single bridge cover") {
    Poset p = poset_family(PosetFamily::pi3, {1, 1, 1, 1, 0});
    REQUIRE(p.size() == 4);
    REQUIRE(p.covers() ==
            std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {2, 3}});
  }
  SECTION("bad parameters rejected") {
    REQUIRE_THROWS_AS(poset_family(PosetFamily::pi1, {0, 1}), BadParams);
    REQUIRE_THROWS_AS(poset_family(PosetFamily::pi3, {1, 1, 0, 1, 0}),
                      BadParams);
    REQUIRE_THROWS_AS(poset_family(PosetFamily::pi2, {1, 1, 1}), BadParams);
  }
}

TEST_CASE("poset polytopes") {
  SECTION("order polytope of a 2-chain") {
    LatticePolytope p = poset_polytope(chain(2), PosetPolytopeKind::order);
    REQUIRE(p.vertices() == std::vector<Point>{{0, 0}, {1, 0}, {1, 1}});
  }
  SECTION("chain polytope of a 2-chain") {
    LatticePolytope p = poset_polytope(chain(2), PosetPolytopeKind::chain);
    REQUIRE(p.vertices() == std::vector<Point>{{0, 0}, {0, 1}, {1, 0}});
  }
  SECTION("order polytope of the X plus a point has 16 vertices") {
    LatticePolytope p =
        poset_polytope(x_shape_plus_point(), PosetPolytopeKind::order);
    REQUIRE(p.vertices().size() == 16);
    REQUIRE(p.lattice_points().size() == 16);
    REQUIRE(p.dim() == 6);
  }
  SECTION("0/1 polytopes have no non-vertex lattice points") {
    for (const Poset& p : {x_shape(), chain(4), antichain(3)}) {
      for (auto kind : {PosetPolytopeKind::order, PosetPolytopeKind::chain}) {
        LatticePolytope poly = poset_polytope(p, kind);
        REQUIRE(poly.vertices() == poly.lattice_points());
      }
    }
  }
}

TEST_CASE("x-shape detection") {
  REQUIRE_FALSE(contains_x_shape(chain(5)));
  REQUIRE_FALSE(contains_x_shape(antichain(5)));
  REQUIRE(contains_x_shape(x_shape()));
  REQUIRE(contains_x_shape(x_shape_plus_point()));
  REQUIRE_FALSE(
      contains_x_shape(poset_family(PosetFamily::pi3, {2, 2, 1, 1, 0})));
  REQUIRE_FALSE(
      contains_x_shape(poset_family(PosetFamily::pi2, {2, 2, 2, 2})));
}

TEST_CASE("comparability graph") {
  SECTION("antichain gives the empty graph") {
    SimpleGraph g = comparability_graph(antichain(3));
    REQUIRE(g.edge_count() == 0);
  }
  SECTION("chain gives a complete graph") {
    SimpleGraph g = comparability_graph(chain(3));
    REQUIRE(g.edge_count() == 3);
  }
  SECTION("Pi2(1,1,1,2) gives K4 minus an edge plus an isolated vertex") {
    SimpleGraph g =
        comparability_graph(poset_family(PosetFamily::pi2, {1, 1, 1, 2}));
    REQUIRE(g.size() == 5);
    REQUIRE(g.edges() == std::vector<std::pair<int, int>>{
                             {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  }
  SECTION("chain polytope equals the stable polytope of the comparability graph") {
    for (const Poset& p :
         {x_shape(), poset_family(PosetFamily::pi2, {1, 1, 1, 2}), chain(4)}) {
      LatticePolytope c = poset_polytope(p, PosetPolytopeKind::chain);
      LatticePolytope s = graph_polytope(comparability_graph(p),
                                         GraphPolytopeKind::stable_set);
      REQUIRE(c.lattice_points() == s.lattice_points());
    }
  }
}

TEST_CASE("hibi rank") {
  REQUIRE(hibi_rank(chain(1)) == 0);
  REQUIRE(hibi_rank(chain(5)) == 0);
  REQUIRE(hibi_rank(poset_family(PosetFamily::pi1, {2, 2})) == 1);
  REQUIRE(hibi_rank(x_shape_plus_point()) == 3);
  SECTION("hat edge count invariant") {
    HatPoset hat = make_hat(x_shape_plus_point());
    REQUIRE(hat.hasse_edge_count == 10);
  }
  SECTION("families have the expected ranks") {
    REQUIRE(hibi_rank(poset_family(PosetFamily::pi2, {1, 2, 1, 0})) == 2);
    REQUIRE(hibi_rank(poset_family(PosetFamily::pi2, {1, 1, 1, 2})) == 2);
    REQUIRE(hibi_rank(poset_family(PosetFamily::pi3, {2, 1, 1, 2, 1})) == 2);
    REQUIRE(hibi_rank(poset_family(PosetFamily::pi4, {1, 2, 2, 1})) == 2);
  }
}
