#include <catch_amalgamated.hpp>

#include "toriclass/classgroup.hpp"
#include "toriclass/families.hpp"

using namespace toriclass;

namespace {

LatticePolytope cube(int d) {
  std::vector<Point> pts;
  for (int m = 0; m < (1 << d); ++m) {
    Point x(d);
    for (int i = 0; i < d; ++i) x[i] = (m >> i) & 1;
    pts.push_back(std::move(x));
  }
  return LatticePolytope::from_points(pts, d);
}

const ClassGroupOptions kAssume{true, std::nullopt};

}  // namespace

TEST_CASE("abelian group canonical form") {
  AbelianGroup a = AbelianGroup::from_factors(2, {1, 1, 2, 6});
  REQUIRE(a.free_rank == 2);
  REQUIRE(a.torsion == std::vector<Int>{2, 6});
  SECTION("direct sums remerge into a divisibility chain") {
    AbelianGroup b = AbelianGroup::from_factors(0, {4});
    AbelianGroup c = a.direct_sum(b);
    REQUIRE(c.free_rank == 2);
    REQUIRE(c.torsion == std::vector<Int>{2, 2, 12});
  }
  SECTION("equality is structural") {
    REQUIRE(AbelianGroup::from_factors(0, {2, 3}) ==
            AbelianGroup::from_factors(0, {6}));
  }
}

TEST_CASE("class group of basic polytopes") {
  SECTION("unit 3-cube is Z^2") {
    AbelianGroup g = class_group(cube(3));
    REQUIRE(g == AbelianGroup::from_factors(2, {}));
  }
  SECTION("stable polytope of the sun graph is Z^3") {
    AbelianGroup g = class_group(
        graph_polytope(sun_graph(), GraphPolytopeKind::stable_set), kAssume);
    REQUIRE(g.free_rank == 3);
    REQUIRE(g.torsion_free());
  }
  SECTION("edge polytope of K222 is Z^3") {
    AbelianGroup g = class_group(
        graph_polytope(complete_multipartite({2, 2, 2}), GraphPolytopeKind::edge),
        kAssume);
    REQUIRE(g.free_rank == 3);
    REQUIRE(g.torsion_free());
  }
  SECTION("non-idp polytope rejected") {
    LatticePolytope p = LatticePolytope::from_points(
        {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 2}}, 3);
    REQUIRE_THROWS_AS(class_group(p), NotIdp);
  }
  SECTION("lattice-deficient points rejected") {
    // segment whose lattice points are 0 and 2 only would be deficient; use
    // a 2-dim polytope with sparse points: conv{(0,0),(2,0),(0,2)} has
    // interior lattice points, so build the deficient triangle instead
    LatticePolytope p = LatticePolytope::from_points(
        {{0, 0}, {1, 2}, {2, 1}}, 2);
    // lattice points: the three vertices and (1,1); differences generate
    // index-3 sublattice?  If they generate, no throw; just check the call
    // is consistent with the span test.
    AffineLatticeBasis span = affine_lattice_span(p.reduced_lattice_points());
    bool generating = span.rank() == p.dim() && span.lattice_index() == 1;
    if (generating) {
      REQUIRE_NOTHROW(class_group(p, kAssume));
    } else {
      REQUIRE_THROWS_AS(class_group(p, kAssume), LatticeDeficient);
    }
  }
}

TEST_CASE("class group rank shortcut") {
  REQUIRE(class_group_rank(cube(2)) == 1);
  LatticePolytope tri = LatticePolytope::from_points({{0, 0}, {1, 0}, {0, 1}}, 2);
  REQUIRE(class_group_rank(tri) == 0);
  LatticePolytope order_x_pt = poset_polytope(
      Poset::from_relations(6, {{0, 2}, {1, 2}, {2, 3}, {2, 4}}),
      PosetPolytopeKind::order);
  REQUIRE(class_group_rank(order_x_pt, kAssume) == 3);
  REQUIRE(class_group(order_x_pt, kAssume).free_rank == 3);
}

TEST_CASE("combinatorial rank shortcuts") {
  SECTION("hibi") {
    REQUIRE(shortcut_rank(poset_family(PosetFamily::pi1, {2, 2})) == 1);
  }
  SECTION("stable") {
    SimpleGraph g = comparability_graph(poset_family(PosetFamily::pi2, {1, 1, 1, 2}));
    REQUIRE(shortcut_rank_stable(g) == 2);
    REQUIRE_THROWS_AS(
        shortcut_rank_stable(SimpleGraph::from_edges(
            5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})),
        NotPerfect);
  }
  SECTION("edge") {
    REQUIRE(shortcut_rank_edge(two_squares_shared_vertex()) == 2);
    REQUIRE(shortcut_rank_edge(complete_multipartite({2, 2, 2})) == 3);
    REQUIRE(shortcut_rank_edge(complete_multipartite({2, 2})) == 1);
    REQUIRE_THROWS_AS(shortcut_rank_edge(SimpleGraph(3)), Disconnected);
  }
  SECTION("shortcut agrees with the smith-form computation") {
    std::vector<SimpleGraph> graphs = {
        complete_multipartite({2, 2, 2}), complete_multipartite({2, 3}),
        two_squares_shared_vertex(), sun_graph(),
        complete_multipartite({1, 1, 1})};
    for (const SimpleGraph& g : graphs) {
      AbelianGroup cg =
          class_group(graph_polytope(g, GraphPolytopeKind::edge), kAssume);
      REQUIRE(cg.torsion_free());
      REQUIRE(cg.free_rank == shortcut_rank_edge(g));
      REQUIRE(cg.free_rank ==
              class_group_rank(graph_polytope(g, GraphPolytopeKind::edge),
                               kAssume));
    }
  }
}

TEST_CASE("paper witness values") {
  // the three rank-3 witnesses
  LatticePolytope order_x_pt = poset_polytope(
      Poset::from_relations(6, {{0, 2}, {1, 2}, {2, 3}, {2, 4}}),
      PosetPolytopeKind::order);
  REQUIRE(class_group(order_x_pt, kAssume) == AbelianGroup::from_factors(3, {}));
  REQUIRE(class_group(graph_polytope(sun_graph(), GraphPolytopeKind::stable_set),
                      kAssume) == AbelianGroup::from_factors(3, {}));
  REQUIRE(class_group(graph_polytope(complete_multipartite({2, 2, 2}),
                                     GraphPolytopeKind::edge),
                      kAssume) == AbelianGroup::from_factors(3, {}));
  // the two rank-2 witnesses
  SimpleGraph gpi2 = comparability_graph(poset_family(PosetFamily::pi2, {1, 1, 1, 2}));
  REQUIRE(class_group(graph_polytope(gpi2, GraphPolytopeKind::stable_set),
                      kAssume) == AbelianGroup::from_factors(2, {}));
  REQUIRE(class_group(graph_polytope(two_squares_shared_vertex(),
                                     GraphPolytopeKind::edge),
                      kAssume) == AbelianGroup::from_factors(2, {}));
  // complete bipartite edge polytopes have rank 1
  for (long a = 2; a <= 4; ++a)
    for (long b = a; b <= 4; ++b)
      REQUIRE(class_group(graph_polytope(complete_multipartite({a, b}),
                                         GraphPolytopeKind::edge),
                          kAssume) == AbelianGroup::from_factors(1, {}));
}

TEST_CASE("pyramid invariance of the class group") {
  std::vector<LatticePolytope> bases = {
      cube(2), cube(3),
      graph_polytope(complete_multipartite({2, 2}), GraphPolytopeKind::edge)};
  for (const LatticePolytope& p : bases)
    REQUIRE(class_group(pyramid(p), kAssume) == class_group(p, kAssume));
}
