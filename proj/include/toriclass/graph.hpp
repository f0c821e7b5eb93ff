#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "toriclass/errors.hpp"
#include "toriclass/polytope.hpp"
#include "toriclass/poset.hpp"

namespace toriclass {

class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n) : n_(n), adj_(n, 0) {
    if (n < 1 || n > 30) throw BadParams("graph size out of range");
  }

  static SimpleGraph from_edges(int n, std::vector<std::pair<int, int>> edges) {
    SimpleGraph g(n);
    for (auto [i, j] : edges) g.add_edge(i, j);
    return g;
  }

  void add_edge(int i, int j) {
    if (i < 0 || i >= n_ || j < 0 || j >= n_ || i == j)
      throw BadParams("bad edge");
    adj_[i] |= (1u << j);
    adj_[j] |= (1u << i);
  }

  int size() const { return n_; }
  bool adjacent(int i, int j) const { return (adj_[i] >> j) & 1u; }
  std::uint32_t neighbors(int i) const { return adj_[i]; }
  int degree(int i) const { return std::popcount(adj_[i]); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (adjacent(i, j)) out.push_back({i, j});
    return out;
  }

  int edge_count() const {
    int c = 0;
    for (int i = 0; i < n_; ++i) c += degree(i);
    return c / 2;
  }

  SimpleGraph complement() const {
    SimpleGraph g(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (!adjacent(i, j)) g.add_edge(i, j);
    return g;
  }

  // Connected component of `start` inside `allowed`.
  std::uint32_t component(int start, std::uint32_t allowed) const {
    std::uint32_t seen = 1u << start, frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (int i = 0; i < n_; ++i)
        if (frontier & (1u << i)) next |= adj_[i] & allowed;
      next &= ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  std::vector<std::uint32_t> components(std::uint32_t allowed) const {
    std::vector<std::uint32_t> out;
    std::uint32_t left = allowed;
    while (left) {
      int v = std::countr_zero(left);
      std::uint32_t c = component(v, allowed);
      out.push_back(c);
      left &= ~c;
    }
    return out;
  }

  std::uint32_t full_mask() const {
    return n_ == 32 ? ~0u : ((1u << n_) - 1);
  }

  bool connected() const {
    return components(full_mask()).size() <= 1;
  }

  // Two-coloring of the vertices in `allowed`; false if an odd cycle exists.
  bool bipartition(std::uint32_t allowed, std::uint32_t& side) const {
    side = 0;
    std::uint32_t seen = 0;
    for (int s = 0; s < n_; ++s) {
      if (!(allowed & (1u << s)) || (seen & (1u << s))) continue;
      std::vector<int> stack = {s};
      seen |= (1u << s);
      side |= (1u << s);
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        std::uint32_t nb = adj_[v] & allowed;
        for (int w = 0; w < n_; ++w) {
          if (!(nb & (1u << w))) continue;
          bool v_side = (side >> v) & 1u;
          if (!(seen & (1u << w))) {
            seen |= (1u << w);
            if (!v_side) side |= (1u << w);
            stack.push_back(w);
          } else if (((side >> w) & 1u) == v_side) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool is_bipartite() const {
    std::uint32_t side;
    return bipartition(full_mask(), side);
  }

  bool has_odd_cycle_within(std::uint32_t mask) const {
    std::uint32_t side;
    return !bipartition(mask, side);
  }

  bool operator==(const SimpleGraph& o) const {
    return n_ == o.n_ && adj_ == o.adj_;
  }

 private:
  int n_ = 0;
  std::vector<std::uint32_t> adj_;
};

// All inclusion-maximal cliques, sorted as vertex lists.
inline std::vector<std::vector<int>> maximal_cliques(const SimpleGraph& g) {
  std::vector<std::uint32_t> found;
  // Bron-Kerbosch with greedy pivoting
  auto rec = [&](auto&& self, std::uint32_t r, std::uint32_t p,
                 std::uint32_t x) -> void {
    if (p == 0 && x == 0) {
      found.push_back(r);
      return;
    }
    std::uint32_t px = p | x;
    int pivot = -1, best = -1;
    for (int v = 0; v < g.size(); ++v)
      if (px & (1u << v)) {
        int cnt = std::popcount(p & g.neighbors(v));
        if (cnt > best) {
          best = cnt;
          pivot = v;
        }
      }
    std::uint32_t cand = p & ~g.neighbors(pivot);
    for (int v = 0; v < g.size(); ++v) {
      if (!(cand & (1u << v))) continue;
      self(self, r | (1u << v), p & g.neighbors(v), x & g.neighbors(v));
      p &= ~(1u << v);
      x |= (1u << v);
    }
  };
  rec(rec, 0, g.full_mask(), 0);
  std::vector<std::vector<int>> out;
  for (std::uint32_t m : found) {
    std::vector<int> c;
    for (int v = 0; v < g.size(); ++v)
      if (m & (1u << v)) c.push_back(v);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline bool induced_cycle_on(const SimpleGraph& g, std::uint32_t mask,
                             int size) {
  // induced subgraph is a single cycle iff every vertex has degree 2 in it
  // and it is connected
  for (int v = 0; v < g.size(); ++v)
    if (mask & (1u << v))
      if (std::popcount(g.neighbors(v) & mask) != 2) return false;
  int start = std::countr_zero(mask);
  return std::popcount(g.component(start, mask)) == size;
}

inline bool has_odd_hole(const SimpleGraph& g) {
  const int n = g.size();
  for (int k = 5; k <= n; k += 2) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      std::uint32_t mask = 0;
      for (int i : idx) mask |= (1u << i);
      if (induced_cycle_on(g, mask, k)) return true;
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == n - k + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int t = pos + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
    }
  }
  return false;
}

}  // namespace detail

// Strong-perfect-graph test by brute force: no induced odd hole in the graph
// or its complement.
inline bool is_perfect(const SimpleGraph& g, int bound = 10) {
  if (g.size() > bound)
    throw TooLarge("perfectness test limited to " + std::to_string(bound) +
                   " vertices");
  return !detail::has_odd_hole(g) && !detail::has_odd_hole(g.complement());
}

struct BlockDecomposition {
  std::vector<std::uint32_t> blocks;  // 2-connected components, vertex masks
  std::vector<int> cut_vertices;
  // bipartite tree on cut vertices and blocks
  std::vector<std::pair<int, int>> block_graph_edges;  // (cut idx, block idx)
};

inline BlockDecomposition blocks(const SimpleGraph& g) {
  const int n = g.size();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::pair<int, int>> edge_stack;
  std::vector<std::uint32_t> block_masks;
  std::vector<bool> is_cut(n, false);
  int timer = 0;

  auto pop_block = [&](int u, int v) {
    std::uint32_t mask = 0;
    while (!edge_stack.empty()) {
      auto [a, b] = edge_stack.back();
      edge_stack.pop_back();
      mask |= (1u << a) | (1u << b);
      if ((a == u && b == v) || (a == v && b == u)) break;
    }
    if (mask) block_masks.push_back(mask);
  };

  auto dfs = [&](auto&& self, int u) -> void {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (int v = 0; v < n; ++v) {
      if (!g.adjacent(u, v)) continue;
      if (disc[v] < 0) {
        ++children;
        parent[v] = u;
        edge_stack.push_back({u, v});
        self(self, v);
        low[u] = std::min(low[u], low[v]);
        if ((parent[u] < 0 && children > 1) ||
            (parent[u] >= 0 && low[v] >= disc[u])) {
          is_cut[u] = true;
          pop_block(u, v);
        } else if (parent[u] < 0) {
          pop_block(u, v);
        }
      } else if (v != parent[u] && disc[v] < disc[u]) {
        edge_stack.push_back({u, v});
        low[u] = std::min(low[u], disc[v]);
      }
    }
    if (parent[u] < 0 && children == 0)
      block_masks.push_back(1u << u);  // isolated vertex
  };

  for (int s = 0; s < n; ++s)
    if (disc[s] < 0) dfs(dfs, s);

  BlockDecomposition bd;
  bd.blocks = std::move(block_masks);
  std::sort(bd.blocks.begin(), bd.blocks.end());
  for (int v = 0; v < n; ++v)
    if (is_cut[v]) bd.cut_vertices.push_back(v);
  for (std::size_t c = 0; c < bd.cut_vertices.size(); ++c)
    for (std::size_t b = 0; b < bd.blocks.size(); ++b)
      if (bd.blocks[b] & (1u << bd.cut_vertices[c]))
        bd.block_graph_edges.push_back({static_cast<int>(c),
                                        static_cast<int>(b)});
  return bd;
}

// All simple cycles, as vertex sequences; each cycle appears once, anchored
// at its smallest vertex with its second vertex below its last.
inline std::vector<std::vector<int>> simple_cycles(const SimpleGraph& g) {
  std::vector<std::vector<int>> cycles;
  const int n = g.size();
  std::vector<int> path;
  auto dfs = [&](auto&& self, int start, int u, std::uint32_t used) -> void {
    for (int v = 0; v < n; ++v) {
      if (!g.adjacent(u, v)) continue;
      if (v == start && path.size() >= 3) {
        if (path[1] < path.back()) cycles.push_back(path);
        continue;
      }
      if (v <= start || (used & (1u << v))) continue;
      path.push_back(v);
      self(self, start, v, used | (1u << v));
      path.pop_back();
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    dfs(dfs, s, s, 1u << s);
  }
  return cycles;
}

// Every pair of vertex-disjoint odd cycles must be joined by an edge.
inline bool odd_cycle_condition(const SimpleGraph& g) {
  std::vector<std::uint32_t> odd_masks;
  for (const auto& c : simple_cycles(g)) {
    if (c.size() % 2 == 0) continue;
    std::uint32_t m = 0;
    for (int v : c) m |= (1u << v);
    odd_masks.push_back(m);
  }
  std::sort(odd_masks.begin(), odd_masks.end());
  odd_masks.erase(std::unique(odd_masks.begin(), odd_masks.end()),
                  odd_masks.end());
  std::vector<std::uint32_t> reach(odd_masks.size(), 0);
  for (std::size_t i = 0; i < odd_masks.size(); ++i) {
    std::uint32_t r = odd_masks[i];
    for (int v = 0; v < g.size(); ++v)
      if (odd_masks[i] & (1u << v)) r |= g.neighbors(v);
    reach[i] = r;
  }
  for (std::size_t i = 0; i < odd_masks.size(); ++i)
    for (std::size_t j = i + 1; j < odd_masks.size(); ++j) {
      if (odd_masks[i] & odd_masks[j]) continue;
      if ((reach[i] & odd_masks[j]) == 0) return false;
    }
  return true;
}

struct VertexStatus {
  bool bipartite = false;
  std::vector<bool> regular;   // meaningful for non-bipartite graphs
  std::vector<bool> ordinary;  // G minus v stays connected
  std::vector<bool> cut;       // complement of ordinary
};

inline VertexStatus vertex_status(const SimpleGraph& g) {
  if (!g.connected()) throw Disconnected("vertex_status needs a connected graph");
  const int n = g.size();
  VertexStatus st;
  st.bipartite = g.is_bipartite();
  st.regular.assign(n, false);
  st.ordinary.assign(n, false);
  st.cut.assign(n, false);
  for (int v = 0; v < n; ++v) {
    std::uint32_t rest = g.full_mask() & ~(1u << v);
    auto comps = g.components(rest);
    st.ordinary[v] = comps.size() <= 1;
    st.cut[v] = !st.ordinary[v];
    if (!st.bipartite) {
      bool all_odd = true;
      for (std::uint32_t c : comps)
        if (!g.has_odd_cycle_within(c)) all_odd = false;
      st.regular[v] = all_odd && !comps.empty();
    }
  }
  return st;
}

struct SpecialSet {
  enum class Kind { fundamental, acceptable };
  Kind kind;
  std::uint32_t members;  // the independent set T
  std::uint32_t closure;  // T together with its neighborhood
  bool spanning = false;  // closure covers every vertex
};

// Independent sets whose neighborhood-bipartite graph is connected and whose
// complement satisfies the defining residual condition.  For bipartite
// graphs only sets inside the side of the smallest-labeled vertex are kept.
inline std::vector<SpecialSet> special_sets(const SimpleGraph& g) {
  if (!g.connected()) throw Disconnected("special_sets needs a connected graph");
  const int n = g.size();
  if (n > 25) throw TooLarge("special_sets limited to 25 vertices");
  std::uint32_t side = 0;
  bool bip = g.bipartition(g.full_mask(), side);
  std::uint32_t v1 = bip ? (side & g.full_mask()) : 0;
  if (bip && !(v1 & 1u)) v1 = g.full_mask() & ~v1;

  std::vector<SpecialSet> out;
  std::uint32_t all = g.full_mask();
  for (std::uint32_t t = 1; t <= all; ++t) {
    if ((t & all) != t) break;
    bool independent = true;
    for (int v = 0; v < n && independent; ++v)
      if (t & (1u << v))
        if (g.neighbors(v) & t) independent = false;
    if (!independent) continue;
    if (bip && (t & ~v1)) continue;

    std::uint32_t nbh = 0;
    for (int v = 0; v < n; ++v)
      if (t & (1u << v)) nbh |= g.neighbors(v);
    std::uint32_t closure = t | nbh;

    // connectivity of the bipartite graph on T and N(T) with T-N(T) edges
    int start = std::countr_zero(t);
    std::uint32_t seen = 1u << start, frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (int v = 0; v < n; ++v) {
        if (!(frontier & (1u << v))) continue;
        if (t & (1u << v))
          next |= g.neighbors(v) & nbh;
        else
          next |= g.neighbors(v) & t;
      }
      next &= ~seen;
      seen |= next;
      frontier = next;
    }
    if (seen != closure) continue;

    std::uint32_t rest = all & ~closure;
    if (bip) {
      if (rest == 0) continue;
      auto comps = g.components(rest);
      if (comps.size() != 1) continue;
      bool has_edge = false;
      for (int v = 0; v < n && !has_edge; ++v)
        if (rest & (1u << v))
          if (g.neighbors(v) & rest) has_edge = true;
      if (!has_edge) continue;
      out.push_back({SpecialSet::Kind::acceptable, t, closure, false});
    } else {
      bool ok = true;
      for (std::uint32_t c : g.components(rest))
        if (!g.has_odd_cycle_within(c)) ok = false;
      if (!ok) continue;
      out.push_back({SpecialSet::Kind::fundamental, t, closure, rest == 0});
    }
  }
  return out;
}

enum class GraphPolytopeKind { stable_set, edge };

inline std::vector<std::uint32_t> independent_sets(const SimpleGraph& g) {
  if (g.size() > 25) throw TooLarge("independent set enumeration limited");
  std::vector<std::uint32_t> out;
  auto rec = [&](auto&& self, int v, std::uint32_t mask) -> void {
    if (v == g.size()) {
      out.push_back(mask);
      return;
    }
    self(self, v + 1, mask);
    if ((g.neighbors(v) & mask) == 0) self(self, v + 1, mask | (1u << v));
  };
  rec(rec, 0, 0);
  return out;
}

inline LatticePolytope graph_polytope(const SimpleGraph& g,
                                      GraphPolytopeKind kind) {
  const int n = g.size();
  std::vector<Point> pts;
  if (kind == GraphPolytopeKind::stable_set) {
    for (std::uint32_t m : independent_sets(g)) {
      Point x(n);
      for (int i = 0; i < n; ++i) x[i] = (m >> i) & 1u;
      pts.push_back(std::move(x));
    }
  } else {
    auto es = g.edges();
    if (es.empty()) throw EmptyGraph("edge polytope needs at least one edge");
    for (auto [i, j] : es) {
      Point x(n);
      x[i] = 1;
      x[j] = 1;
      pts.push_back(std::move(x));
    }
  }
  return LatticePolytope::from_points(std::move(pts), n);
}

inline SimpleGraph comparability_graph(const Poset& p) {
  SimpleGraph g(p.size());
  for (int i = 0; i < p.size(); ++i)
    for (int j = i + 1; j < p.size(); ++j)
      if (p.comparable(i, j)) g.add_edge(i, j);
  return g;
}

}  // namespace toriclass
