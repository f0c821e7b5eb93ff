#include <catch_amalgamated.hpp>

#include "toriclass/io.hpp"

using namespace toriclass;

TEST_CASE("poset json round trip") {
  Poset p = poset_family(PosetFamily::pi3, {2, 1, 1, 2, 1});
  json doc = to_json(p);
  Poset q = poset_from_json(doc);
  REQUIRE(p == q);
  REQUIRE(to_json(q) == doc);
  REQUIRE_THROWS_AS(poset_from_json(json{{"covers", json::array()}}),
                    ParseError);
}

TEST_CASE("graph json round trip") {
  SimpleGraph g = sun_graph();
  json doc = to_json(g);
  SimpleGraph h = graph_from_json(doc);
  REQUIRE(g == h);
  REQUIRE(to_json(h) == doc);
}

TEST_CASE("polytope json round trip") {
  LatticePolytope p = graph_polytope(complete_multipartite({2, 2}),
                                     GraphPolytopeKind::edge);
  json doc = to_json(p);
  REQUIRE(doc.contains("vertices"));
  REQUIRE(doc.contains("facets"));
  REQUIRE(doc.contains("lattice_points"));
  LatticePolytope q = polytope_from_json(doc);  // reads generators back
  REQUIRE(q.generators() == p.generators());
  REQUIRE(to_json(q) == doc);
}

TEST_CASE("dot export") {
  std::string dot = to_dot(poset_family(PosetFamily::pi1, {1, 1}), true);
  REQUIRE(dot.find("digraph") != std::string::npos);
  REQUIRE(dot.find("bot") != std::string::npos);
  std::string gd = to_dot(complete_multipartite({2, 2}), {{0, 1}, {2, 3}});
  REQUIRE(gd.find("rank=same") != std::string::npos);
  REQUIRE(gd.find("v1 -- v3") != std::string::npos);
}

TEST_CASE("family grammar") {
  SECTION("posets") {
    REQUIRE(parse_poset_family("Pi1:1,1").size() == 2);
    REQUIRE(parse_poset_family("Pi2:1,1,1,2").size() == 5);
    REQUIRE(parse_poset_family("chain:4").covers().size() == 3);
    REQUIRE(parse_poset_family("xshape").size() == 5);
    REQUIRE_THROWS_AS(parse_poset_family("Pi1:1"), ParseError);
    REQUIRE_THROWS_AS(parse_poset_family("nosuch:1"), ParseError);
  }
  SECTION("graphs") {
    REQUIRE(parse_graph_family("K:2,2").edge_count() == 4);
    REQUIRE(parse_graph_family("K_2,2").edge_count() == 4);
    REQUIRE(parse_graph_family("K:2,2,2").edge_count() == 12);
    REQUIRE(parse_graph_family("Kst:2,2,1,1").edge_count() == 8);
    REQUIRE(parse_graph_family("K1st:2,2,1,1").size() == 7);
    REQUIRE(parse_graph_family("gamma_5_3") == sun_graph());
    REQUIRE(parse_graph_family("H_5_2") == two_squares_shared_vertex());
    REQUIRE(parse_graph_family("K_prop53:1,1,1,1") ==
            two_squares_shared_vertex());
    REQUIRE(parse_graph_family("ear:2,2,1,3,2").size() == 5);
    REQUIRE(parse_graph_family("cycle:5").edge_count() == 5);
    REQUIRE_THROWS_AS(parse_graph_family("ear:2,2,1,2,2"), BadParams);
  }
  SECTION("polytope specs") {
    LatticePolytope a = parse_polytope_spec("family:edge:K_2,2");
    LatticePolytope b = parse_polytope_spec("family:order:Pi1:1,1");
    REQUIRE(a.dim() == 2);
    REQUIRE(b.dim() == 2);
    REQUIRE(parse_polytope_spec("family:stable:gamma_5_3").dim() == 6);
    REQUIRE(parse_polytope_spec("family:chain:xshape").dim() == 5);
    REQUIRE_THROWS_AS(parse_polytope_spec("order:Pi1:1,1"), ParseError);
    REQUIRE_THROWS_AS(parse_polytope_spec("family:bogus:Pi1:1,1"), ParseError);
  }
}

TEST_CASE("class group json shape") {
  LatticePolytope p = graph_polytope(sun_graph(), GraphPolytopeKind::stable_set);
  ClassGroupOptions assume{true, std::nullopt};
  AbelianGroup g = class_group(p, assume);
  DivisorMatrix dm = divisor_matrix(p);
  SmithForm s = smith_normal_form(dm.m);
  json doc = to_json(g, dm.m.rows(), s.rank);
  REQUIRE(doc.at("free_rank") == 3);
  REQUIRE(doc.at("torsion").empty());
  REQUIRE(doc.at("psi_size") == 10);
  REQUIRE(doc.at("matrix_rank") == 7);
}
