#pragma once

#include <numeric>
#include <vector>

#include "toriclass/graph.hpp"

namespace toriclass {

// Complete multipartite graph; parts are labeled consecutively.
inline SimpleGraph complete_multipartite(const std::vector<long>& parts) {
  if (parts.empty()) throw BadParams("need at least one part");
  long n = 0;
  for (long p : parts) {
    if (p < 1) throw BadParams("part sizes must be positive");
    n += p;
  }
  SimpleGraph g(static_cast<int>(n));
  long a_start = 0;
  for (std::size_t a = 0; a < parts.size(); ++a) {
    long b_start = a_start + parts[a];
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      for (long i = 0; i < parts[a]; ++i)
        for (long j = 0; j < parts[b]; ++j)
          g.add_edge(static_cast<int>(a_start + i),
                     static_cast<int>(b_start + j));
      b_start += parts[b];
    }
    a_start += parts[a];
  }
  return g;
}

// Complete bipartite graph K_{s1,s2} minus the edges of a K_{t1,t2}:
// side one is {0..s1+t1-1} with the t1 block at the end, side two is
// {s1+t1..d-1} with the t2 block at the front; the t1 and t2 blocks are
// not joined.
inline SimpleGraph bipartite_minus(long s1, long s2, long t1, long t2) {
  if (s1 < 1 || s2 < 1 || t1 < 0 || t2 < 0)
    throw BadParams("need s1, s2 >= 1 and t1, t2 >= 0");
  int d = static_cast<int>(s1 + s2 + t1 + t2);
  SimpleGraph g(d);
  for (long i = 0; i < s1 + t1; ++i)
    for (long j = s1 + t1 + t2; j < d; ++j)
      g.add_edge(static_cast<int>(i), static_cast<int>(j));
  for (long i = 0; i < s1; ++i)
    for (long j = s1 + t1; j < d; ++j)
      g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

// bipartite_minus with one extra vertex joined to both s-blocks.
inline SimpleGraph tripartite_minus(long s1, long s2, long t1, long t2) {
  SimpleGraph base = bipartite_minus(s1, s2, t1, t2);
  int d = base.size();
  SimpleGraph g(d + 1);
  for (auto [i, j] : base.edges()) g.add_edge(i, j);
  for (long i = 0; i < s1; ++i) g.add_edge(static_cast<int>(i), d);
  for (long i = s1 + t1 + t2; i < d; ++i) g.add_edge(static_cast<int>(i), d);
  return g;
}

namespace detail {

// Connects a and b by a path of `len` edges through fresh vertices appended
// at the end of the graph.
inline SimpleGraph attach_path(const SimpleGraph& g, int a, int b, long len) {
  if (len < 1) throw BadParams("path length must be positive");
  if (len == 1 && g.adjacent(a, b)) throw BadParams("path would double an edge");
  int n = g.size();
  SimpleGraph out(n + static_cast<int>(len) - 1);
  for (auto [i, j] : g.edges()) out.add_edge(i, j);
  int prev = a;
  for (long k = 1; k < len; ++k) {
    out.add_edge(prev, n + static_cast<int>(k) - 1);
    prev = n + static_cast<int>(k) - 1;
  }
  out.add_edge(prev, b);
  return out;
}

inline int bip_side_of(const SimpleGraph& g, int v) {
  std::uint32_t side;
  if (!g.bipartition(g.full_mask(), side)) throw BadParams("graph not bipartite");
  return (side >> v) & 1u;
}

}  // namespace detail

// An ear (path) attached to two vertices of a connected bipartite core;
// parity is forced by the endpoints: an ear across the bipartition must have
// even length >= 2, one within a side must have odd length.
inline SimpleGraph bipartite_with_ear(const SimpleGraph& core, int a, int b,
                                      long len) {
  if (a < 0 || b < 0 || a >= core.size() || b >= core.size() || a == b)
    throw BadParams("bad ear endpoints");
  bool same_side = detail::bip_side_of(core, a) == detail::bip_side_of(core, b);
  if (same_side && len % 2 == 0)
    throw BadParams("ear within one side must have odd length");
  if (!same_side && (len % 2 != 0 || len < 2))
    throw BadParams("ear across the sides must have even length >= 2");
  return detail::attach_path(core, a, b, len);
}

// Two complete bipartite cores joined by two paths; a path of length zero
// identifies its endpoints, and both paths may collapse when the parities
// allow it.  Endpoints: a1, a2 in the first core, chosen by side flags;
// b1, b2 likewise in the second.  The combined parity must close an odd
// cycle through both paths.
struct BridgeSpec {
  long s1, s2, t1, t2;
  bool a1_second_side = false, a2_second_side = true;
  bool b1_second_side = false, b2_second_side = true;
  long len1 = 0, len2 = 1;
};

inline SimpleGraph bridged_bipartite_pair(const BridgeSpec& sp) {
  if (sp.s1 < 2 || sp.s2 < 2 || sp.t1 < 2 || sp.t2 < 2)
    throw BadParams("both cores need part sizes >= 2");
  if (sp.len1 < 0 || sp.len2 < 0)
    throw BadParams("path lengths must be nonnegative");
  int sigma1 = (sp.a1_second_side == sp.a2_second_side) ? 1 : 0;
  int sigma2 = (sp.b1_second_side == sp.b2_second_side) ? 1 : 0;
  if (((sp.len1 + sp.len2) % 2) != ((1 + sigma1 + sigma2) % 2))
    throw BadParams("path length parity does not close an odd cycle");

  int n1 = static_cast<int>(sp.s1 + sp.s2);
  int a1 = sp.a1_second_side ? static_cast<int>(sp.s1) : 0;
  int a2 = sp.a2_second_side ? static_cast<int>(sp.s1) : 0;
  if (sp.a1_second_side == sp.a2_second_side) ++a2;
  int b1 = static_cast<int>(n1 + (sp.b1_second_side ? sp.t1 : 0));
  int b2 = static_cast<int>(n1 + (sp.b2_second_side ? sp.t1 : 0));
  if (sp.b1_second_side == sp.b2_second_side) ++b2;

  SimpleGraph g(static_cast<int>(n1 + sp.t1 + sp.t2));
  for (long i = 0; i < sp.s1; ++i)
    for (long j = sp.s1; j < n1; ++j)
      g.add_edge(static_cast<int>(i), static_cast<int>(j));
  for (long i = n1; i < n1 + sp.t1; ++i)
    for (long j = n1 + sp.t1; j < n1 + sp.t1 + sp.t2; ++j)
      g.add_edge(static_cast<int>(i), static_cast<int>(j));

  auto merge = [](SimpleGraph graph, int keep, int drop,
                  int* other) -> SimpleGraph {
    SimpleGraph h(graph.size() - 1);
    auto remap = [&](int v) {
      return v < drop ? v : (v == drop ? keep : v - 1);
    };
    for (auto [i, j] : graph.edges())
      if (remap(i) != remap(j)) h.add_edge(remap(i), remap(j));
    if (other) *other = remap(*other);
    return h;
  };

  if (sp.len1 == 0 && sp.len2 == 0) {
    g = merge(g, a1, b1, &b2);
    return merge(g, a2, b2, nullptr);
  }
  if (sp.len1 == 0) {
    g = merge(g, a1, b1, &b2);
    return detail::attach_path(g, a2, b2, sp.len2);
  }
  if (sp.len2 == 0) {
    g = merge(g, a2, b2, &b1);
    return detail::attach_path(g, a1, b1, sp.len1);
  }
  g = detail::attach_path(g, a1, b1, sp.len1);
  return detail::attach_path(g, a2, b2, sp.len2);
}

// Six-vertex chordal graph: a central triangle {3,4,5} with each outer
// vertex attached to one of its edges.
inline SimpleGraph sun_graph() {
  return SimpleGraph::from_edges(
      6, {{0, 4}, {0, 5}, {1, 3}, {1, 5}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}});
}

// Two complete bipartite graphs sharing one vertex: K_{t1+1,t2+1} on
// ({1..t1, d+2}, {t1+1..t1+t2, d+3}) and K_{s1+1,s2+1} on
// ({t1+t2+1..t1+t2+s1, d+3}, {t1+t2+s1+1..d, d+1}), 1-based, d+3 shared.
inline SimpleGraph bipartite_wedge(long s1, long s2, long t1, long t2) {
  if (s1 < 1 || s2 < 1 || t1 < 1 || t2 < 1)
    throw BadParams("wedge parameters must be positive");
  long d = s1 + s2 + t1 + t2;
  SimpleGraph g(static_cast<int>(d + 3));
  auto idx = [](long one_based) { return static_cast<int>(one_based - 1); };
  std::vector<long> left1, right1, left2, right2;
  for (long i = 1; i <= t1; ++i) left1.push_back(i);
  left1.push_back(d + 2);
  for (long j = t1 + 1; j <= t1 + t2; ++j) right1.push_back(j);
  right1.push_back(d + 3);
  for (long i = t1 + t2 + 1; i <= t1 + t2 + s1; ++i) left2.push_back(i);
  left2.push_back(d + 3);
  for (long j = t1 + t2 + s1 + 1; j <= d; ++j) right2.push_back(j);
  right2.push_back(d + 1);
  for (long i : left1)
    for (long j : right1) g.add_edge(idx(i), idx(j));
  for (long i : left2)
    for (long j : right2) g.add_edge(idx(i), idx(j));
  return g;
}

// Two 4-cycles glued at one vertex (the wedge with all parameters 1).
inline SimpleGraph two_squares_shared_vertex() {
  return bipartite_wedge(1, 1, 1, 1);
}

}  // namespace toriclass
