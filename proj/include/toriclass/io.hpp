#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "toriclass/classgroup.hpp"
#include "toriclass/equivalence.hpp"
#include "toriclass/families.hpp"
#include "toriclass/graph.hpp"
#include "toriclass/polytope.hpp"
#include "toriclass/poset.hpp"

namespace toriclass {

using json = nlohmann::json;

namespace io_detail {

inline long long to_ll(const Int& x) {
  if (x > Int(std::numeric_limits<long long>::max()) ||
      x < Int(std::numeric_limits<long long>::min()))
    throw Error("integer too large for JSON output: " + x.str());
  return static_cast<long long>(x);
}

inline json point_to_json(const Point& p) {
  json a = json::array();
  for (const Int& x : p) a.push_back(to_ll(x));
  return a;
}

inline Point point_from_json(const json& a) {
  Point p;
  for (const auto& x : a) p.push_back(Int(x.get<long long>()));
  return p;
}

}  // namespace io_detail

// ---- posets: {"size": d, "covers": [[i,j],...]} with 1-based labels ----

inline json to_json(const Poset& p) {
  json covers = json::array();
  for (auto [i, j] : p.covers()) covers.push_back({i + 1, j + 1});
  return json{{"size", p.size()}, {"covers", covers}};
}

inline Poset poset_from_json(const json& j) {
  if (!j.contains("size") || !j.contains("covers"))
    throw ParseError("poset document needs \"size\" and \"covers\"");
  int n = j.at("size").get<int>();
  std::vector<std::pair<int, int>> rels;
  for (const auto& e : j.at("covers"))
    rels.push_back({e.at(0).get<int>() - 1, e.at(1).get<int>() - 1});
  return Poset::from_relations(n, rels);
}

// ---- graphs: {"n": k, "edges": [[i,j],...]} with 1-based labels ----

inline json to_json(const SimpleGraph& g) {
  json edges = json::array();
  for (auto [i, j] : g.edges()) edges.push_back({i + 1, j + 1});
  return json{{"n", g.size()}, {"edges", edges}};
}

inline SimpleGraph graph_from_json(const json& j) {
  if (!j.contains("n") || !j.contains("edges"))
    throw ParseError("graph document needs \"n\" and \"edges\"");
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges"))
    edges.push_back({e.at(0).get<int>() - 1, e.at(1).get<int>() - 1});
  return SimpleGraph::from_edges(n, edges);
}

// ---- polytopes ----

inline LatticePolytope polytope_from_json(const json& j) {
  if (!j.contains("ambient_dim") || !j.contains("generators"))
    throw ParseError("polytope document needs \"ambient_dim\" and \"generators\"");
  std::size_t d = j.at("ambient_dim").get<std::size_t>();
  std::vector<Point> pts;
  for (const auto& row : j.at("generators"))
    pts.push_back(io_detail::point_from_json(row));
  return LatticePolytope::from_points(std::move(pts), d);
}

inline json to_json(const LatticePolytope& p, bool with_derived = true) {
  json out;
  out["ambient_dim"] = p.ambient_dim();
  json gens = json::array();
  for (const Point& g : p.generators())
    gens.push_back(io_detail::point_to_json(g));
  out["generators"] = gens;
  if (!with_derived) return out;
  out["dim"] = p.dim();
  json verts = json::array();
  for (const Point& v : p.vertices())
    verts.push_back(io_detail::point_to_json(v));
  out["vertices"] = verts;
  json lpts = json::array();
  for (const Point& v : p.lattice_points())
    lpts.push_back(io_detail::point_to_json(v));
  out["lattice_points"] = lpts;
  json facets = json::array();
  if (p.dim() > 0)
    for (const FacetForm& f : p.facets().forms) {
      json ff;
      ff["normal"] = io_detail::point_to_json(f.normal);
      ff["offset"] = io_detail::to_ll(f.offset);
      ff["divisor"] = io_detail::to_ll(f.divisor);
      facets.push_back(ff);
    }
  out["facets"] = facets;
  return out;
}

inline json to_json(const AbelianGroup& g, std::size_t psi_size,
                    std::size_t matrix_rank) {
  json torsion = json::array();
  for (const Int& d : g.torsion) torsion.push_back(io_detail::to_ll(d));
  return json{{"free_rank", g.free_rank},
              {"torsion", torsion},
              {"psi_size", psi_size},
              {"matrix_rank", matrix_rank}};
}

inline json to_json(const EquivWitness& w) {
  json rows = json::array();
  for (std::size_t i = 0; i < w.matrix.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < w.matrix.cols(); ++j)
      row.push_back(io_detail::to_ll(w.matrix(i, j)));
    rows.push_back(row);
  }
  return json{{"matrix", rows},
              {"translation", io_detail::point_to_json(w.translation)}};
}

inline json to_json(const Fingerprint& fp) {
  return json{{"dim", fp.dim},
              {"vertices", fp.vertex_count},
              {"lattice_points", fp.lattice_point_count},
              {"facets", fp.facet_count},
              {"points_per_facet", fp.points_per_facet},
              {"facets_per_vertex", fp.facets_per_vertex},
              {"normalized_volume", fp.normalized_volume.str()}};
}

// ---- DOT ----

inline std::string to_dot(const Poset& p, bool with_hat = false) {
  std::string s = "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int i = 0; i < p.size(); ++i)
    s += "  p" + std::to_string(i + 1) + ";\n";
  for (auto [i, j] : p.covers())
    s += "  p" + std::to_string(i + 1) + " -> p" + std::to_string(j + 1) +
         ";\n";
  if (with_hat) {
    s += "  bot [label=\"0\"];\n  top [label=\"1\"];\n";
    for (int v : p.minimal_elements())
      s += "  bot -> p" + std::to_string(v + 1) + ";\n";
    for (int v : p.maximal_elements())
      s += "  p" + std::to_string(v + 1) + " -> top;\n";
  }
  s += "}\n";
  return s;
}

inline std::string to_dot(const SimpleGraph& g,
                          const std::vector<std::vector<int>>& parts = {}) {
  std::string s = "graph g {\n  node [shape=circle];\n";
  for (std::size_t k = 0; k < parts.size(); ++k) {
    s += "  { rank=same;";
    for (int v : parts[k]) s += " v" + std::to_string(v + 1) + ";";
    s += " }\n";
  }
  for (int i = 0; i < g.size(); ++i) s += "  v" + std::to_string(i + 1) + ";\n";
  for (auto [i, j] : g.edges())
    s += "  v" + std::to_string(i + 1) + " -- v" + std::to_string(j + 1) +
         ";\n";
  s += "}\n";
  return s;
}

// ---- family spec grammar ----
//
//   polytope spec:  family:<domain>:<name>[<sep><params>]
//   domain:         order | chain | stable | edge
//   name/params:    see the family tables below; <sep> is ':' or '_'
//
// Hand-rolled recursive descent with character positions in errors.

namespace io_detail {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos) + " in '" +
                     s + "'");
  }

  bool eat(char c) {
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string ident() {
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '.'))
      ++pos;
    if (pos == start) fail("expected a name");
    return s.substr(start, pos - start);
  }

  long number() {
    std::size_t start = pos;
    if (pos < s.size() && s[pos] == '-') ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) fail("expected a number");
    return std::stol(s.substr(start, pos - start));
  }

  std::vector<long> params() {
    std::vector<long> out;
    out.push_back(number());
    while (eat(',')) out.push_back(number());
    return out;
  }

  bool done() const { return pos == s.size(); }
};

// splits "Pi1:1,1" or "K_2,2" or "gamma_5_3" into a name and parameters
inline std::pair<std::string, std::vector<long>> family_parts(Cursor& cur) {
  // names may contain underscores followed by letters (gamma_5_3, H_5_2,
  // K_prop53); an underscore or colon followed by a digit starts parameters
  std::string name;
  for (;;) {
    name += cur.ident();
    if (cur.pos < cur.s.size() && cur.s[cur.pos] == '_' &&
        cur.pos + 1 < cur.s.size() &&
        !std::isdigit(static_cast<unsigned char>(cur.s[cur.pos + 1]))) {
      name += '_';
      ++cur.pos;
      continue;
    }
    break;
  }
  std::vector<long> params;
  if (cur.eat(':') || cur.eat('_')) params = cur.params();
  return {name, params};
}

}  // namespace io_detail

inline Poset parse_poset_family(const std::string& spec) {
  io_detail::Cursor cur{spec};
  auto [name, params] = io_detail::family_parts(cur);
  if (!cur.done()) cur.fail("trailing input");
  auto arity = [&](std::size_t k) {
    if (params.size() != k)
      cur.fail(name + " takes " + std::to_string(k) + " parameters");
  };
  if (name == "Pi1") {
    arity(2);
    return poset_family(PosetFamily::pi1, params);
  }
  if (name == "Pi2") {
    arity(4);
    return poset_family(PosetFamily::pi2, params);
  }
  if (name == "Pi3") {
    arity(5);
    return poset_family(PosetFamily::pi3, params);
  }
  if (name == "Pi4") {
    arity(4);
    return poset_family(PosetFamily::pi4, params);
  }
  if (name == "chain") {
    arity(1);
    std::vector<std::pair<int, int>> rels;
    for (long i = 0; i + 1 < params[0]; ++i)
      rels.push_back({static_cast<int>(i), static_cast<int>(i + 1)});
    return Poset::from_relations(static_cast<int>(params[0]), rels);
  }
  if (name == "antichain") {
    arity(1);
    return Poset::from_relations(static_cast<int>(params[0]), {});
  }
  if (name == "xshape") {
    arity(0);
    return poset_family(PosetFamily::pi4, {1, 1, 1, 1});
  }
  cur.fail("unknown poset family '" + name + "'");
}

inline SimpleGraph parse_graph_family(const std::string& spec) {
  // fixed-name families whose historical names contain digit separators
  if (spec == "gamma_5_3" || spec == "sun") return sun_graph();
  if (spec == "H_5_2") return two_squares_shared_vertex();
  io_detail::Cursor cur{spec};
  auto [name, params] = io_detail::family_parts(cur);
  if (!cur.done()) cur.fail("trailing input");
  auto arity = [&](std::size_t k) {
    if (params.size() != k)
      cur.fail(name + " takes " + std::to_string(k) + " parameters");
  };
  if (name == "K") {
    if (params.empty()) cur.fail("K needs part sizes");
    return complete_multipartite(params);
  }
  if (name == "Kst") {
    arity(4);
    return bipartite_minus(params[0], params[1], params[2], params[3]);
  }
  if (name == "K1st") {
    arity(4);
    return tripartite_minus(params[0], params[1], params[2], params[3]);
  }
  if (name == "ear") {
    arity(5);  // s1, s2, a, b, len (a, b 1-based vertices of K_{s1,s2})
    SimpleGraph core = complete_multipartite({params[0], params[1]});
    return bipartite_with_ear(core, static_cast<int>(params[2] - 1),
                              static_cast<int>(params[3] - 1), params[4]);
  }
  if (name == "Kst_ear") {
    arity(7);  // s1, s2, t1, t2, a, b, len
    SimpleGraph core = bipartite_minus(params[0], params[1], params[2], params[3]);
    return bipartite_with_ear(core, static_cast<int>(params[4] - 1),
                              static_cast<int>(params[5] - 1), params[6]);
  }
  if (name == "Kbridge") {
    arity(10);  // s1, s2, t1, t2, sa1, sa2, sb1, sb2, len1, len2
    BridgeSpec sp{params[0], params[1], params[2], params[3],
                  params[4] != 0,  params[5] != 0,
                  params[6] != 0,  params[7] != 0,
                  params[8],       params[9]};
    return bridged_bipartite_pair(sp);
  }
  if (name == "K_prop53") {
    arity(4);
    return bipartite_wedge(params[0], params[1], params[2], params[3]);
  }
  if (name == "cycle") {
    arity(1);
    SimpleGraph g(static_cast<int>(params[0]));
    for (int i = 0; i < params[0]; ++i)
      g.add_edge(i, static_cast<int>((i + 1) % params[0]));
    return g;
  }
  if (name == "complete") {
    arity(1);
    SimpleGraph g(static_cast<int>(params[0]));
    for (int i = 0; i < params[0]; ++i)
      for (int j = i + 1; j < params[0]; ++j) g.add_edge(i, j);
    return g;
  }
  if (name == "empty") {
    arity(1);
    return SimpleGraph(static_cast<int>(params[0]));
  }
  cur.fail("unknown graph family '" + name + "'");
}

// "family:<domain>:<rest>" -> polytope
inline LatticePolytope parse_polytope_spec(const std::string& spec) {
  io_detail::Cursor cur{spec};
  std::string head = cur.ident();
  if (head != "family") cur.fail("polytope specs start with 'family'");
  if (!cur.eat(':')) cur.fail("expected ':' after 'family'");
  std::string domain = cur.ident();
  if (!cur.eat(':')) cur.fail("expected ':' after the domain");
  std::string rest = spec.substr(cur.pos);
  if (domain == "order")
    return poset_polytope(parse_poset_family(rest), PosetPolytopeKind::order);
  if (domain == "chain")
    return poset_polytope(parse_poset_family(rest), PosetPolytopeKind::chain);
  if (domain == "stable")
    return graph_polytope(parse_graph_family(rest),
                          GraphPolytopeKind::stable_set);
  if (domain == "edge")
    return graph_polytope(parse_graph_family(rest), GraphPolytopeKind::edge);
  cur.fail("unknown domain '" + domain + "'");
}

}  // namespace toriclass
