#include <catch_amalgamated.hpp>

#include <random>

#include "toriclass/enumerate.hpp"

using namespace toriclass;

TEST_CASE("graph enumeration counts") {
  // numbers of simple graphs up to isomorphism
  REQUIRE(all_graphs(1).size() == 1);
  REQUIRE(all_graphs(2).size() == 2);
  REQUIRE(all_graphs(3).size() == 4);
  REQUIRE(all_graphs(4).size() == 11);
  REQUIRE(all_graphs(5).size() == 34);
  REQUIRE(all_graphs(6).size() == 156);
  REQUIRE(all_graphs(7).size() == 1044);
}

TEST_CASE("poset enumeration counts") {
  REQUIRE(all_posets(1).size() == 1);
  REQUIRE(all_posets(2).size() == 2);
  REQUIRE(all_posets(3).size() == 5);
  REQUIRE(all_posets(4).size() == 16);
  REQUIRE(all_posets(5).size() == 63);
  REQUIRE(all_posets(6).size() == 318);
}

TEST_CASE("canonical keys are relabeling invariants") {
  std::mt19937_64 rng(42);
  for (const SimpleGraph& g : all_graphs(6)) {
    if (rng() % 10 != 0) continue;  // subsample for speed
    std::vector<int> perm(g.size());
    for (int i = 0; i < g.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    SimpleGraph h(g.size());
    for (auto [i, j] : g.edges()) h.add_edge(perm[i], perm[j]);
    REQUIRE(canonical_key(g) == canonical_key(h));
  }
  for (const Poset& p : all_posets(5)) {
    std::vector<int> perm(p.size());
    for (int i = 0; i < p.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> rels;
    for (int i = 0; i < p.size(); ++i)
      for (int j = 0; j < p.size(); ++j)
        if (p.less(i, j)) rels.push_back({perm[i], perm[j]});
    Poset q = Poset::from_relations(p.size(), rels);
    REQUIRE(canonical_key(p) == canonical_key(q));
  }
}

TEST_CASE("filters") {
  GraphFilter bip7_12;
  bip7_12.bipartite = true;
  bip7_12.connected = true;
  bip7_12.edge_count = 12;
  auto pool = graphs(7, bip7_12);
  for (const SimpleGraph& g : pool) {
    REQUIRE(g.is_bipartite());
    REQUIRE(g.edge_count() == 12);
    REQUIRE(g.connected());
  }
  REQUIRE(!pool.empty());

  GraphFilter twoconn;
  twoconn.two_connected = true;
  for (const SimpleGraph& g : graphs(4, twoconn))
    REQUIRE(blocks(g).blocks.size() == 1);
}
