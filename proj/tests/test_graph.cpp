#include <catch_amalgamated.hpp>

#include <set>

#include "toriclass/families.hpp"
#include "toriclass/graph.hpp"

using namespace toriclass;

namespace {

SimpleGraph cycle(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

SimpleGraph complete(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

std::set<std::set<int>> as_sets(const std::vector<std::vector<int>>& vs) {
  std::set<std::set<int>> out;
  for (const auto& v : vs) out.insert(std::set<int>(v.begin(), v.end()));
  return out;
}

std::uint32_t mask_of(std::initializer_list<int> vs) {
  std::uint32_t m = 0;
  for (int v : vs) m |= (1u << v);
  return m;
}

}  // namespace

TEST_CASE("graph families") {
  SECTION("bipartite minus block") {
    SimpleGraph g = bipartite_minus(2, 2, 1, 1);
    REQUIRE(g.size() == 6);
    REQUIRE(g.edge_count() == 8);
    // the two withheld-block vertices (2 and 3, 0-based) stay non-adjacent
    REQUIRE_FALSE(g.adjacent(2, 3));
    REQUIRE(g.is_bipartite());
  }
  SECTION("tripartite minus block") {
    SimpleGraph g = tripartite_minus(2, 2, 1, 1);
    REQUIRE(g.size() == 7);
    REQUIRE_FALSE(g.is_bipartite());
    REQUIRE(g.degree(6) == 4);
  }
  SECTION("sun graph matches its pinned edge list") {
    SimpleGraph g = sun_graph();
    REQUIRE(g.edges() == std::vector<std::pair<int, int>>{{0, 4},
                                                          {0, 5},
                                                          {1, 3},
                                                          {1, 5},
                                                          {2, 3},
                                                          {2, 4},
                                                          {3, 4},
                                                          {3, 5},
                                                          {4, 5}});
  }
  SECTION("two squares sharing a vertex") {
    SimpleGraph g = two_squares_shared_vertex();
    REQUIRE(g.size() == 7);
    REQUIRE(g.edges() == std::vector<std::pair<int, int>>{{0, 1},
                                                          {0, 6},
                                                          {1, 5},
                                                          {2, 3},
                                                          {2, 4},
                                                          {3, 6},
                                                          {4, 6},
                                                          {5, 6}});
    REQUIRE(g.is_bipartite());
  }
  SECTION("ear parity validation") {
    SimpleGraph core = complete_multipartite({2, 2});
    REQUIRE_THROWS_AS(bipartite_with_ear(core, 0, 2, 3), BadParams);
    REQUIRE_THROWS_AS(bipartite_with_ear(core, 0, 1, 2), BadParams);
    SimpleGraph cross = bipartite_with_ear(core, 0, 2, 2);
    REQUIRE(cross.size() == 5);
    REQUIRE_FALSE(cross.is_bipartite());
    SimpleGraph same = bipartite_with_ear(core, 0, 1, 1);
    REQUIRE(same.size() == 4);
    REQUIRE_FALSE(same.is_bipartite());
  }
  SECTION("bridged pair parity validation") {
    BridgeSpec sp{2, 2, 2, 2};
    sp.len1 = 0;
    sp.len2 = 1;  // different/different parts: sum must be odd
    SimpleGraph g = bridged_bipartite_pair(sp);
    REQUIRE(g.size() == 7);
    REQUIRE_FALSE(g.is_bipartite());
    sp.len2 = 2;
    REQUIRE_THROWS_AS(bridged_bipartite_pair(sp), BadParams);
    BridgeSpec both_zero{2, 2, 2, 2};
    both_zero.len1 = 0;
    both_zero.len2 = 0;
    // two identifications need one same-side pair to close an odd cycle
    REQUIRE_THROWS_AS(bridged_bipartite_pair(both_zero), BadParams);
    both_zero.a1_second_side = false;
    both_zero.a2_second_side = false;  // same side in the first core
    SimpleGraph glued = bridged_bipartite_pair(both_zero);
    REQUIRE(glued.size() == 6);
    REQUIRE_FALSE(glued.is_bipartite());
  }
}

TEST_CASE("maximal cliques") {
  REQUIRE(as_sets(maximal_cliques(complete(4))) ==
          std::set<std::set<int>>{{0, 1, 2, 3}});
  REQUIRE(as_sets(maximal_cliques(SimpleGraph(3))) ==
          std::set<std::set<int>>{{0}, {1}, {2}});
  REQUIRE(as_sets(maximal_cliques(sun_graph())) ==
          std::set<std::set<int>>{{0, 4, 5}, {1, 3, 5}, {2, 3, 4}, {3, 4, 5}});
}

TEST_CASE("perfectness") {
  REQUIRE_FALSE(is_perfect(cycle(5)));
  REQUIRE_FALSE(is_perfect(cycle(7)));
  REQUIRE(is_perfect(cycle(4)));
  REQUIRE(is_perfect(cycle(6)));
  REQUIRE(is_perfect(complete_multipartite({2, 3})));
  REQUIRE(is_perfect(sun_graph()));
  REQUIRE_FALSE(is_perfect(cycle(7).complement()));
  REQUIRE_THROWS_AS(is_perfect(SimpleGraph(11)), TooLarge);
}

TEST_CASE("blocks") {
  SECTION("triangle is one block") {
    BlockDecomposition bd = blocks(complete(3));
    REQUIRE(bd.blocks.size() == 1);
    REQUIRE(bd.cut_vertices.empty());
  }
  SECTION("path of 3 edges") {
    SimpleGraph g = SimpleGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    BlockDecomposition bd = blocks(g);
    REQUIRE(bd.blocks.size() == 3);
    REQUIRE(bd.cut_vertices == std::vector<int>{1, 2});
    REQUIRE(bd.block_graph_edges.size() == 4);
  }
  SECTION("two squares sharing a vertex") {
    BlockDecomposition bd = blocks(two_squares_shared_vertex());
    REQUIRE(bd.blocks.size() == 2);
    REQUIRE(bd.cut_vertices == std::vector<int>{6});
    std::set<std::uint32_t> expect{mask_of({0, 1, 5, 6}), mask_of({2, 3, 4, 6})};
    REQUIRE(std::set<std::uint32_t>(bd.blocks.begin(), bd.blocks.end()) ==
            expect);
  }
}

TEST_CASE("odd cycle condition") {
  REQUIRE(odd_cycle_condition(complete_multipartite({3, 4})));
  REQUIRE(odd_cycle_condition(complete_multipartite({2, 2, 2})));
  REQUIRE(odd_cycle_condition(complete(6)));
  SECTION("two triangles joined by a 2-edge path fail") {
    SimpleGraph g = SimpleGraph::from_edges(
        8, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 7}});
    REQUIRE_FALSE(odd_cycle_condition(g));
  }
}

TEST_CASE("vertex status") {
  SECTION("triangle has no regular vertex") {
    VertexStatus st = vertex_status(complete(3));
    REQUIRE_FALSE(st.bipartite);
    for (int v = 0; v < 3; ++v) REQUIRE_FALSE(st.regular[v]);
  }
  SECTION("K222 has all six regular") {
    VertexStatus st = vertex_status(complete_multipartite({2, 2, 2}));
    for (int v = 0; v < 6; ++v) REQUIRE(st.regular[v]);
  }
  SECTION("K23 has all five ordinary") {
    VertexStatus st = vertex_status(complete_multipartite({2, 3}));
    REQUIRE(st.bipartite);
    for (int v = 0; v < 5; ++v) {
      REQUIRE(st.ordinary[v]);
      REQUIRE_FALSE(st.cut[v]);
    }
  }
  SECTION("disconnected input rejected") {
    REQUIRE_THROWS_AS(vertex_status(SimpleGraph(3)), Disconnected);
  }
}

TEST_CASE("special sets") {
  SECTION("complete bipartite graphs have no acceptable sets") {
    for (auto [a, b] : {std::pair{2, 2}, {2, 3}, {3, 3}, {2, 4}}) {
      auto sets = special_sets(complete_multipartite({a, b}));
      REQUIRE(sets.empty());
    }
  }
  SECTION("bipartite-minus graph has exactly one acceptable set") {
    auto sets = special_sets(bipartite_minus(2, 2, 1, 1));
    REQUIRE(sets.size() == 1);
    REQUIRE(sets[0].kind == SpecialSet::Kind::acceptable);
    REQUIRE(sets[0].members == mask_of({2}));
  }
  SECTION("triangle has three spanning fundamental singletons") {
    auto sets = special_sets(complete(3));
    REQUIRE(sets.size() == 3);
    for (const auto& s : sets) {
      REQUIRE(s.kind == SpecialSet::Kind::fundamental);
      REQUIRE(s.spanning);
      REQUIRE(std::popcount(s.members) == 1);
    }
  }
  SECTION("acceptable sets in either side correspond bijectively") {
    for (const SimpleGraph& g :
         {bipartite_minus(2, 2, 1, 1), bipartite_minus(3, 2, 2, 1),
          two_squares_shared_vertex(),
          SimpleGraph::from_edges(6, {{0, 3}, {0, 4}, {1, 4}, {1, 5}, {2, 5}})}) {
      if (!g.connected()) continue;
      std::uint32_t side;
      REQUIRE(g.bipartition(g.full_mask(), side));
      std::uint32_t v1 = (side & 1u) ? side : (g.full_mask() & ~side);
      auto sets = special_sets(g);  // all inside v1
      std::set<std::uint32_t> images;
      for (const auto& s : sets) {
        REQUIRE((s.members & ~v1) == 0);
        std::uint32_t nbh = 0;
        for (int v = 0; v < g.size(); ++v)
          if (s.members & (1u << v)) nbh |= g.neighbors(v);
        std::uint32_t mirror = (g.full_mask() & ~v1) & ~nbh;
        REQUIRE(mirror != 0);
        images.insert(mirror);
      }
      REQUIRE(images.size() == sets.size());
      // the mirrored sets are acceptable on the other side: check by
      // relabeling the graph so the other side contains vertex 0
      // (covered implicitly by the bijection being well-defined and
      //  injective; spot-check one mirrored set satisfies the definition)
      for (std::uint32_t t : images) {
        std::uint32_t nbh = 0;
        for (int v = 0; v < g.size(); ++v)
          if (t & (1u << v)) nbh |= g.neighbors(v);
        std::uint32_t rest = g.full_mask() & ~(t | nbh);
        REQUIRE(g.components(rest).size() == 1);
      }
    }
  }
}

TEST_CASE("graph polytopes") {
  SECTION("stable polytope of the empty graph is the cube") {
    LatticePolytope p = graph_polytope(SimpleGraph(3), GraphPolytopeKind::stable_set);
    REQUIRE(p.dim() == 3);
    REQUIRE(p.lattice_points().size() == 8);
  }
  SECTION("edge polytope of the triangle") {
    LatticePolytope p = graph_polytope(complete(3), GraphPolytopeKind::edge);
    REQUIRE(p.dim() == 2);
    REQUIRE(p.vertices().size() == 3);
  }
  SECTION("edgeless graph rejected for edge polytopes") {
    REQUIRE_THROWS_AS(graph_polytope(SimpleGraph(2), GraphPolytopeKind::edge),
                      EmptyGraph);
  }
  SECTION("stable polytope of the sun graph") {
    LatticePolytope p = graph_polytope(sun_graph(), GraphPolytopeKind::stable_set);
    REQUIRE(p.dim() == 6);
    REQUIRE(p.facets().forms.size() == 6 + 4);
  }
  SECTION("edge polytope dimension formula") {
    for (const SimpleGraph& g :
         {complete(4), cycle(5), cycle(6), complete_multipartite({2, 3}),
          two_squares_shared_vertex(), sun_graph()}) {
      if (!g.connected()) continue;
      LatticePolytope p = graph_polytope(g, GraphPolytopeKind::edge);
      int b = g.is_bipartite() ? 1 : 0;
      REQUIRE(p.dim() == static_cast<std::size_t>(g.size() - b - 1));
    }
  }
}
