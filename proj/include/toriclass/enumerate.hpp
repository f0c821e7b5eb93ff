#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "toriclass/canonical.hpp"
#include "toriclass/errors.hpp"
#include "toriclass/families.hpp"
#include "toriclass/graph.hpp"
#include "toriclass/poset.hpp"

namespace toriclass {

// One representative per isomorphism class, deterministic order (sorted by
// canonical key).  Built by vertex extension from the previous size and
// cached per process.
inline const std::vector<SimpleGraph>& all_graphs(int n) {
  if (n < 1 || n > 8) throw TooLarge("graph enumeration limited to 8 vertices");
  static std::mutex mu;
  static std::map<int, std::vector<SimpleGraph>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  for (int k = 1; k <= n; ++k) {
    if (cache.count(k)) continue;
    std::map<std::uint64_t, SimpleGraph> reps;
    if (k == 1) {
      reps.emplace(0, SimpleGraph(1));
    } else {
      for (const SimpleGraph& base : cache[k - 1]) {
        for (std::uint32_t nb = 0; nb < (1u << (k - 1)); ++nb) {
          SimpleGraph g(k);
          for (auto [i, j] : base.edges()) g.add_edge(i, j);
          for (int v = 0; v < k - 1; ++v)
            if (nb & (1u << v)) g.add_edge(v, k - 1);
          std::uint64_t key = canonical_key(g);
          reps.emplace(key, std::move(g));
        }
      }
    }
    auto& out = cache[k];
    for (auto& [key, g] : reps) out.push_back(std::move(g));
  }
  return cache[n];
}

inline const std::vector<Poset>& all_posets(int n) {
  if (n < 1 || n > 7) throw TooLarge("poset enumeration limited to 7 elements");
  static std::mutex mu;
  static std::map<int, std::vector<Poset>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  for (int k = 1; k <= n; ++k) {
    if (cache.count(k)) continue;
    std::map<std::uint64_t, Poset> reps;
    if (k == 1) {
      reps.emplace(0, Poset::from_relations(1, {}));
    } else {
      for (const Poset& base : cache[k - 1]) {
        // every poset arises by stacking a maximal element onto an ideal
        for (std::uint32_t ideal : base.ideals()) {
          Poset p = base.with_maximal_element(ideal);
          std::uint64_t key = canonical_key(p);
          reps.emplace(key, std::move(p));
        }
      }
    }
    auto& out = cache[k];
    for (auto& [key, p] : reps) out.push_back(std::move(p));
  }
  return cache[n];
}

struct GraphFilter {
  bool connected = false;
  bool two_connected = false;
  bool bipartite = false;
  bool non_bipartite = false;
  bool perfect = false;
  bool occ = false;
  std::optional<int> edge_count;
  std::optional<int> nontrivial_independent_sets;
  std::optional<int> total_independent_sets;

  bool accepts(const SimpleGraph& g) const {
    if (edge_count && g.edge_count() != *edge_count) return false;
    if (bipartite && !g.is_bipartite()) return false;
    if (non_bipartite && g.is_bipartite()) return false;
    if (connected && !g.connected()) return false;
    if (two_connected) {
      if (g.size() < 3 || !g.connected()) return false;
      if (!blocks(g).cut_vertices.empty()) return false;
    }
    if (perfect && !is_perfect(g)) return false;
    if (occ && !odd_cycle_condition(g)) return false;
    if (nontrivial_independent_sets || total_independent_sets) {
      int total = static_cast<int>(independent_sets(g).size());
      if (total_independent_sets && total != *total_independent_sets)
        return false;
      if (nontrivial_independent_sets &&
          total - 1 - g.size() != *nontrivial_independent_sets)
        return false;
    }
    return true;
  }
};

inline std::vector<SimpleGraph> graphs(int n, const GraphFilter& filter = {}) {
  std::vector<SimpleGraph> out;
  for (const SimpleGraph& g : all_graphs(n))
    if (filter.accepts(g)) out.push_back(g);
  return out;
}

}  // namespace toriclass
