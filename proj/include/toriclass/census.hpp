#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "toriclass/classgroup.hpp"
#include "toriclass/enumerate.hpp"
#include "toriclass/equivalence.hpp"
#include "toriclass/io.hpp"
#include "toriclass/parallel.hpp"

namespace toriclass {

inline constexpr const char* kCensusVersion = "toriclass-census-1";

inline std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

struct CensusRecord {
  std::string kind;  // order | stable | edge
  int n = 0;
  json source;  // poset or graph document
  long rank = 0;
  std::vector<Int> torsion;
  Fingerprint fp;
  int apex_count = 0;
  std::string pyramid_core_ref;  // fingerprint hash of the core, when apex > 0
  std::string id;                // canonical key, hex
};

inline json to_json(const CensusRecord& r) {
  json torsion = json::array();
  for (const Int& d : r.torsion) torsion.push_back(io_detail::to_ll(d));
  json out{{"id", r.id},
           {"kind", r.kind},
           {"n", r.n},
           {"source", r.source},
           {"rank", r.rank},
           {"torsion", torsion},
           {"fingerprint", to_json(r.fp)},
           {"apex_count", r.apex_count}};
  if (r.apex_count > 0)
    out["pyramid_core_ref"] = r.pyramid_core_ref;
  else
    out["pyramid_core_ref"] = nullptr;
  return out;
}

enum class CensusKind { order, stable, edge };

inline std::string census_kind_name(CensusKind k) {
  switch (k) {
    case CensusKind::order: return "order";
    case CensusKind::stable: return "stable";
    case CensusKind::edge: return "edge";
  }
  return "?";
}

inline LatticePolytope census_polytope(CensusKind kind, const Poset& p) {
  (void)kind;
  return poset_polytope(p, PosetPolytopeKind::order);
}

// On-disk record store: <dir>/<kind>/<n>/<filter-hash>.jsonl
class CensusCache {
 public:
  explicit CensusCache(std::string dir) : dir_(std::move(dir)) {}

  std::optional<std::vector<json>> load(const std::string& kind, int n,
                                        const std::string& filter_desc) const {
    std::filesystem::path path = entry_path(kind, n, filter_desc);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::vector<json> lines;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      lines.push_back(json::parse(line));
    }
    return lines;
  }

  void store(const std::string& kind, int n, const std::string& filter_desc,
             const std::vector<json>& lines) const {
    std::filesystem::path path = entry_path(kind, n, filter_desc);
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    for (const json& l : lines) out << l.dump() << "\n";
  }

  std::filesystem::path entry_path(const std::string& kind, int n,
                                   const std::string& filter_desc) const {
    std::string key =
        fnv1a_hex(std::string(kCensusVersion) + "|" + filter_desc);
    return std::filesystem::path(dir_) / kind / std::to_string(n) /
           (key + ".jsonl");
  }

 private:
  std::string dir_;
};

struct ClassifyOptions {
  std::optional<long> rank_filter;
  int jobs = 1;
  const CensusCache* cache = nullptr;
};

namespace census_detail {

inline CensusRecord record_for(CensusKind kind, int n, json source,
                               std::uint64_t key, const LatticePolytope& poly,
                               long shortcut) {
  ClassGroupOptions assume{true, std::nullopt};
  AbelianGroup group = class_group(poly, assume);
  if (group.free_rank != shortcut)
    throw Error("rank mismatch between smith form and shortcut on " +
                source.dump());
  CensusRecord rec;
  rec.kind = census_kind_name(kind);
  rec.n = n;
  rec.source = std::move(source);
  rec.rank = group.free_rank;
  rec.torsion = group.torsion;
  rec.fp = fingerprint(poly);
  auto [core, apex] = pyramid_reduce(poly);
  rec.apex_count = apex;
  if (apex > 0)
    rec.pyramid_core_ref = fnv1a_hex(to_json(fingerprint(core)).dump());
  std::ostringstream os;
  os << std::hex << key;
  rec.id = os.str();
  return rec;
}

}  // namespace census_detail

// Records for exactly the instances on n vertices/elements, sorted by id.
inline std::vector<CensusRecord> classify_level(CensusKind kind, int n,
                                                const ClassifyOptions& opts = {}) {
  std::vector<CensusRecord> level;
  if (kind == CensusKind::order) {
    level = parallel_map(
        all_posets(n),
        [&](const Poset& p) {
          return census_detail::record_for(
              kind, n, to_json(p), canonical_key(p),
              poset_polytope(p, PosetPolytopeKind::order), hibi_rank(p));
        },
        opts.jobs);
  } else if (kind == CensusKind::stable) {
    GraphFilter filter;
    filter.perfect = true;
    level = parallel_map(
        graphs(n, filter),
        [&](const SimpleGraph& g) {
          return census_detail::record_for(
              kind, n, to_json(g), canonical_key(g),
              graph_polytope(g, GraphPolytopeKind::stable_set),
              shortcut_rank_stable(g));
        },
        opts.jobs);
  } else {
    GraphFilter filter;
    filter.connected = true;
    filter.occ = true;
    std::vector<SimpleGraph> pool;
    for (const SimpleGraph& g : graphs(n, filter))
      if (g.edge_count() > 0) pool.push_back(g);
    level = parallel_map(
        pool,
        [&](const SimpleGraph& g) {
          return census_detail::record_for(
              kind, n, to_json(g), canonical_key(g),
              graph_polytope(g, GraphPolytopeKind::edge),
              shortcut_rank_edge(g));
        },
        opts.jobs);
  }
  std::sort(level.begin(), level.end(),
            [](const CensusRecord& a, const CensusRecord& b) {
              return a.id < b.id;
            });
  std::vector<CensusRecord> out;
  for (CensusRecord& r : level)
    if (!opts.rank_filter || r.rank == *opts.rank_filter)
      out.push_back(std::move(r));
  return out;
}

// One record per isomorphism class: posets (order), perfect graphs
// (stable), connected graphs with the odd cycle condition (edge).
inline std::vector<CensusRecord> classify(CensusKind kind, int nmax,
                                          const ClassifyOptions& opts = {}) {
  std::vector<CensusRecord> records;
  for (int n = 1; n <= nmax; ++n)
    for (CensusRecord& r : classify_level(kind, n, opts))
      records.push_back(std::move(r));
  return records;
}

// classify() with a read-through cache keyed by (kind, n, rank filter).
inline std::vector<json> classify_cached(CensusKind kind, int nmax,
                                         const ClassifyOptions& opts) {
  std::vector<json> lines;
  for (int n = 1; n <= nmax; ++n) {
    std::string filter_desc =
        "classify|rank=" +
        (opts.rank_filter ? std::to_string(*opts.rank_filter) : "any");
    std::optional<std::vector<json>> hit;
    if (opts.cache)
      hit = opts.cache->load(census_kind_name(kind), n, filter_desc);
    if (!hit) {
      std::vector<json> fresh;
      for (const CensusRecord& r : classify_level(kind, n, opts))
        fresh.push_back(to_json(r));
      if (opts.cache)
        opts.cache->store(census_kind_name(kind), n, filter_desc, fresh);
      hit = std::move(fresh);
    }
    for (json& l : *hit) lines.push_back(std::move(l));
  }
  return lines;
}

// ---- combinatorial facet cross-checks ----

namespace census_detail {

// value vectors of the geometric facets on the lattice points
inline std::set<std::vector<Int>> geometric_value_vectors(
    const LatticePolytope& p) {
  std::set<std::vector<Int>> out;
  const auto& pts = p.reduced_lattice_points();
  for (const FacetForm& f : p.facets().forms) {
    std::vector<Int> vals;
    vals.reserve(pts.size());
    for (const Point& x : pts) vals.push_back(f.value(x));
    out.insert(std::move(vals));
  }
  return out;
}

// ambient affine form evaluated on the (lifted) lattice points, divided by g
inline std::vector<Int> ambient_value_vector(const LatticePolytope& p,
                                             const std::vector<Int>& linear,
                                             const Int& constant,
                                             const Int& divisor) {
  std::vector<Int> vals;
  for (const Point& x : p.reduced_lattice_points()) {
    Point ambient = p.reduction().to_ambient(x);
    Int v = constant;
    for (std::size_t i = 0; i < ambient.size(); ++i)
      v += linear[i] * ambient[i];
    if (v % divisor != 0) throw Error("combinatorial facet value not integral");
    vals.push_back(v / divisor);
  }
  return vals;
}

}  // namespace census_detail

// Geometric facets of the stable-set polytope must be the coordinate forms
// together with one form per maximal clique.
inline bool stable_facets_match(const SimpleGraph& g,
                                const LatticePolytope& stab,
                                std::string* why = nullptr) {
  std::set<std::vector<Int>> combinatorial;
  const int d = g.size();
  for (int i = 0; i < d; ++i) {
    std::vector<Int> linear(d, 0);
    linear[i] = 1;
    combinatorial.insert(
        census_detail::ambient_value_vector(stab, linear, 0, 1));
  }
  for (const auto& clique : maximal_cliques(g)) {
    std::vector<Int> linear(d, 0);
    for (int v : clique) linear[v] = -1;
    combinatorial.insert(
        census_detail::ambient_value_vector(stab, linear, 1, 1));
  }
  std::set<std::vector<Int>> geometric =
      census_detail::geometric_value_vectors(stab);
  if (geometric == combinatorial) return true;
  if (why)
    *why = "stable facet systems differ: " + std::to_string(geometric.size()) +
           " geometric vs " + std::to_string(combinatorial.size()) +
           " combinatorial";
  return false;
}

// Geometric facets of the edge polytope must be the coordinate forms at
// regular (resp. ordinary) vertices together with the neighborhood forms of
// the fundamental (resp. acceptable) sets, halved on spanning fundamental
// sets.
inline bool edge_facets_match(const SimpleGraph& g, const LatticePolytope& pe,
                              std::string* why = nullptr) {
  if (pe.dim() == 0) return true;  // a point has no facets to compare
  VertexStatus st = vertex_status(g);
  std::set<std::vector<Int>> combinatorial;
  const int d = g.size();
  for (int i = 0; i < d; ++i) {
    if (!(st.bipartite ? st.ordinary[i] : st.regular[i])) continue;
    std::vector<Int> linear(d, 0);
    linear[i] = 1;
    combinatorial.insert(census_detail::ambient_value_vector(pe, linear, 0, 1));
  }
  for (const SpecialSet& s : special_sets(g)) {
    std::vector<Int> linear(d, 0);
    std::uint32_t nbh = 0;
    for (int v = 0; v < d; ++v)
      if (s.members & (1u << v)) nbh |= g.neighbors(v);
    for (int v = 0; v < d; ++v) {
      if (s.members & (1u << v))
        linear[v] = -1;
      else if (nbh & (1u << v))
        linear[v] = 1;
    }
    Int divisor = s.spanning ? 2 : 1;
    combinatorial.insert(
        census_detail::ambient_value_vector(pe, linear, 0, divisor));
  }
  std::set<std::vector<Int>> geometric =
      census_detail::geometric_value_vectors(pe);
  if (geometric == combinatorial) return true;
  if (why)
    *why = "edge facet systems differ: " + std::to_string(geometric.size()) +
           " geometric vs " + std::to_string(combinatorial.size()) +
           " combinatorial";
  return false;
}

// ---- alternating column relations of the divisor matrix ----

namespace census_detail {

inline std::vector<Int> column_of(const IntMatrix& m, std::size_t j) {
  std::vector<Int> c(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) c[i] = m(i, j);
  return c;
}

}  // namespace census_detail

// Checks the alternating relations among divisor-matrix columns indexed by
// the edges of cycles: even cycles cancel outright; two odd cycles sharing a
// vertex cancel against each other; two disjoint odd cycles cancel against
// twice the alternating sum along a connecting path.
inline bool edge_column_relations_hold(const SimpleGraph& g,
                                       std::string* why = nullptr) {
  LatticePolytope pe = graph_polytope(g, GraphPolytopeKind::edge);
  DivisorMatrix dm = divisor_matrix(pe);
  const auto& pts = pe.reduced_lattice_points();

  auto edge_column = [&](int a, int b) {
    Point x(g.size(), 0);
    x[a] = 1;
    x[b] = 1;
    auto c = pe.reduction().coordinates(x);
    if (!c) throw Error("edge point escapes the polytope lattice");
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (pts[i] == *c) return census_detail::column_of(dm.m, i);
    throw Error("edge point not among the lattice points");
  };

  auto add_alternating = [&](std::vector<Int>& acc, const std::vector<int>& vs,
                             bool closed, const Int& scale) {
    // edges e_i = {vs[i-1], vs[i]} (and the closing edge when closed),
    // accumulated with signs (-1)^i
    std::size_t len = closed ? vs.size() : vs.size() - 1;
    for (std::size_t i = 1; i <= len; ++i) {
      int a = vs[i - 1], b = vs[i % vs.size()];
      std::vector<Int> col = edge_column(a, b);
      Int sign = (i % 2 == 0) ? scale : -scale;
      for (std::size_t r = 0; r < col.size(); ++r) acc[r] += sign * col[r];
    }
  };

  auto is_zero = [](const std::vector<Int>& v) {
    for (const Int& x : v)
      if (x != 0) return false;
    return true;
  };

  std::vector<std::vector<int>> cycles = simple_cycles(g);
  const std::size_t rows = dm.m.rows();

  for (const auto& c : cycles) {
    if (c.size() % 2 != 0) continue;
    std::vector<Int> acc(rows, 0);
    add_alternating(acc, c, true, 1);
    if (!is_zero(acc)) {
      if (why) *why = "even cycle relation fails";
      return false;
    }
  }

  auto rotate_to = [](std::vector<int> c, int anchor) {
    auto it = std::find(c.begin(), c.end(), anchor);
    std::rotate(c.begin(), it, c.end());
    return c;
  };
  auto mask_of = [](const std::vector<int>& c) {
    std::uint32_t m = 0;
    for (int v : c) m |= (1u << v);
    return m;
  };

  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (cycles[i].size() % 2 == 0) continue;
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      if (cycles[j].size() % 2 == 0) continue;
      std::uint32_t mi = mask_of(cycles[i]), mj = mask_of(cycles[j]);
      std::uint32_t common = mi & mj;
      if (common != 0 && std::popcount(common) == 1) {
        int v = std::countr_zero(common);
        std::vector<Int> acc(rows, 0);
        add_alternating(acc, rotate_to(cycles[i], v), true, 1);
        add_alternating(acc, rotate_to(cycles[j], v), true, -1);
        if (!is_zero(acc)) {
          if (why) *why = "shared-vertex odd cycle relation fails";
          return false;
        }
      } else if (common == 0) {
        // BFS path between the two cycles
        std::vector<int> parent(g.size(), -1);
        std::vector<int> queue;
        for (int v = 0; v < g.size(); ++v)
          if (mi & (1u << v)) {
            parent[v] = v;
            queue.push_back(v);
          }
        int hit = -1;
        for (std::size_t qi = 0; qi < queue.size() && hit < 0; ++qi) {
          int v = queue[qi];
          for (int w = 0; w < g.size(); ++w) {
            if (!g.adjacent(v, w) || parent[w] >= 0) continue;
            parent[w] = v;
            if (mj & (1u << w)) {
              hit = w;
              break;
            }
            queue.push_back(w);
          }
        }
        if (hit < 0) continue;  // different components
        std::vector<int> path;
        for (int v = hit;; v = parent[v]) {
          path.push_back(v);
          if (parent[v] == v) break;
        }
        std::reverse(path.begin(), path.end());
        // path now runs from a vertex of cycle i to the hit on cycle j
        std::size_t m = path.size() - 1;  // edge count
        std::vector<Int> acc(rows, 0);
        add_alternating(acc, rotate_to(cycles[i], path.front()), true, 1);
        Int second = (m % 2 == 0) ? Int(-1) : Int(1);
        add_alternating(acc, rotate_to(cycles[j], path.back()), true, second);
        add_alternating(acc, path, false, -2);
        if (!is_zero(acc)) {
          if (why) *why = "disjoint odd cycle relation fails";
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace toriclass
