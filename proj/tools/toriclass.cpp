// toriclass: build posets, graphs and their lattice polytopes, compute
// divisor class groups of the associated toric rings, decide unimodular
// equivalence, and run the exhaustive census/verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
//             3 proven inequivalence (equiv), 4 search budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "toriclass/census.hpp"
#include "toriclass/io.hpp"
#include "toriclass/verify.hpp"

namespace {

using namespace toriclass;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitInequivalent = 3;
constexpr int kExitBudget = 4;

struct CommonFlags {
  std::string format = "json";
  std::string out;
  int jobs = 1;
  std::string cache_dir;
  long long budget = 10'000'000;
  unsigned long seed = 0;
  std::optional<int> degree_bound;
};

void emit(const CommonFlags& flags, const std::string& text) {
  if (flags.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream f(flags.out);
    if (!f) throw Error("cannot open output file " + flags.out);
    f << text;
    if (!text.empty() && text.back() != '\n') f << "\n";
  }
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  json j;
  f >> j;
  return j;
}

// spec or file: "family:..." builds from the grammar, anything else is a
// polytope JSON document
LatticePolytope load_polytope(const std::string& ref) {
  if (ref.rfind("family:", 0) == 0) return parse_polytope_spec(ref);
  return polytope_from_json(read_json_file(ref));
}

std::string default_cache_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("TORICLASS_CACHE")) return env;
  return "cache";
}

int cmd_poset(const CommonFlags& flags, const std::string& family,
              const std::string& in, bool hat) {
  Poset p = family.empty() ? poset_from_json(read_json_file(in))
                           : parse_poset_family(family);
  if (flags.format == "dot")
    emit(flags, to_dot(p, hat));
  else if (flags.format == "text")
    emit(flags, "poset on " + std::to_string(p.size()) + " elements, " +
                    std::to_string(p.covers().size()) +
                    " covers, class rank " + std::to_string(hibi_rank(p)));
  else
    emit(flags, to_json(p).dump(2));
  return kExitOk;
}

int cmd_graph(const CommonFlags& flags, const std::string& family,
              const std::string& in) {
  SimpleGraph g = family.empty() ? graph_from_json(read_json_file(in))
                                 : parse_graph_family(family);
  if (flags.format == "dot")
    emit(flags, to_dot(g));
  else if (flags.format == "text")
    emit(flags, "graph on " + std::to_string(g.size()) + " vertices, " +
                    std::to_string(g.edge_count()) + " edges");
  else
    emit(flags, to_json(g).dump(2));
  return kExitOk;
}

LatticePolytope polytope_from_flags(const std::string& in,
                                    const std::string& family,
                                    const std::string& poset_family_spec,
                                    const std::string& graph_family_spec,
                                    const std::string& kind) {
  int sources = (!in.empty()) + (!family.empty()) +
                (!poset_family_spec.empty()) + (!graph_family_spec.empty());
  if (sources != 1)
    throw BadParams(
        "give exactly one of --in, --family, --poset-family, --graph-family");
  if (!in.empty()) return polytope_from_json(read_json_file(in));
  if (!family.empty()) return parse_polytope_spec(family);
  if (!poset_family_spec.empty()) {
    Poset p = parse_poset_family(poset_family_spec);
    if (kind == "order") return poset_polytope(p, PosetPolytopeKind::order);
    if (kind == "chain") return poset_polytope(p, PosetPolytopeKind::chain);
    throw BadParams("--kind must be order or chain for posets");
  }
  SimpleGraph g = parse_graph_family(graph_family_spec);
  if (kind == "stable") return graph_polytope(g, GraphPolytopeKind::stable_set);
  if (kind == "edge") return graph_polytope(g, GraphPolytopeKind::edge);
  throw BadParams("--kind must be stable or edge for graphs");
}

int cmd_polytope(const CommonFlags& flags, const LatticePolytope& p,
                 bool idp_check) {
  json doc = to_json(p);
  if (idp_check) {
    IdpCertificate cert = is_idp(p, flags.degree_bound);
    json c;
    switch (cert.verdict) {
      case IdpCertificate::Verdict::idp:
        c["verdict"] = "idp";
        break;
      case IdpCertificate::Verdict::not_idp:
        c["verdict"] = "not_idp";
        c["witness"] = io_detail::point_to_json(cert.witness);
        c["witness_degree"] = cert.witness_degree;
        break;
      case IdpCertificate::Verdict::inconclusive:
        c["verdict"] = "inconclusive";
        c["degree_checked"] = cert.degree_checked;
        break;
    }
    doc["idp"] = c;
  }
  if (flags.format == "text") {
    std::string s = "polytope: ambient dim " +
                    std::to_string(p.ambient_dim()) + ", dim " +
                    std::to_string(p.dim()) + ", " +
                    std::to_string(p.vertices().size()) + " vertices, " +
                    std::to_string(p.lattice_points().size()) +
                    " lattice points";
    if (p.dim() > 0)
      s += ", " + std::to_string(p.facets().forms.size()) + " facets";
    emit(flags, s);
  } else {
    emit(flags, doc.dump(2));
  }
  return kExitOk;
}

int cmd_classgroup(const CommonFlags& flags, const LatticePolytope& p,
                   bool assume_idp) {
  ClassGroupOptions opts;
  opts.assume_idp = assume_idp;
  opts.idp_degree_bound = flags.degree_bound;
  AbelianGroup g = class_group(p, opts);
  std::size_t psi = p.dim() == 0 ? 0 : p.facets().forms.size();
  std::size_t rank = 0;
  if (p.dim() > 0) {
    DivisorMatrix dm = divisor_matrix(p);
    rank = smith_normal_form(dm.m).rank;
  }
  if (flags.format == "text")
    emit(flags, "class group: " + g.to_string());
  else
    emit(flags, to_json(g, psi, rank).dump());
  return kExitOk;
}

int cmd_equiv(const CommonFlags& flags, const std::string& a,
              const std::string& b) {
  LatticePolytope pa = load_polytope(a);
  LatticePolytope pb = load_polytope(b);
  EquivOptions opts;
  opts.budget = flags.budget;
  auto w = unimodular_equivalent(pa, pb, opts);
  if (!w) {
    std::cerr << "inequivalent\n";
    return kExitInequivalent;
  }
  emit(flags, to_json(*w).dump(2));
  return kExitOk;
}

int cmd_census(const CommonFlags& flags, const std::string& kind, int nmax,
               std::optional<long> rank) {
  CensusKind k;
  if (kind == "order")
    k = CensusKind::order;
  else if (kind == "stable")
    k = CensusKind::stable;
  else if (kind == "edge")
    k = CensusKind::edge;
  else
    throw BadParams("census kind must be order, stable or edge");
  CensusCache cache(default_cache_dir(flags.cache_dir));
  ClassifyOptions opts;
  opts.rank_filter = rank;
  opts.jobs = flags.jobs;
  opts.cache = &cache;
  std::string out;
  for (const json& line : classify_cached(k, nmax, opts))
    out += line.dump() + "\n";
  emit(flags, out);
  return kExitOk;
}

int cmd_verify(const CommonFlags& flags, const std::string& id,
               std::optional<int> max_vertices) {
  VerifyOptions opts;
  opts.max_vertices = max_vertices;
  opts.jobs = flags.jobs;
  opts.budget = flags.budget;
  json reports = json::array();
  bool all_pass = true;
  for (const std::string& one : verify_group(id)) {
    VerifyReport rep = verify(one, opts);
    reports.push_back(to_json(rep));
    all_pass = all_pass && rep.pass();
    std::cerr << (rep.pass() ? "PASS " : "FAIL ") << one << "  ("
              << rep.instance_count << " instances, " << rep.wall_time_s
              << "s)\n";
    for (const std::string& c : rep.counterexamples)
      std::cerr << "  counterexample: " << c << "\n";
  }
  emit(flags, reports.dump(2));
  return all_pass ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lattice-polytope toolkit for toric class groups"};
  app.require_subcommand(1);
  app.fallthrough();
  CommonFlags flags;
  app.add_option("--format", flags.format, "output format: json, text or dot")
      ->capture_default_str();
  app.add_option("--out", flags.out, "write results to a file");
  app.add_option("--jobs", flags.jobs, "worker threads")->capture_default_str();
  app.add_option("--cache", flags.cache_dir,
                 "census cache directory (default: $TORICLASS_CACHE or ./cache)");
  app.add_option("--budget", flags.budget, "equivalence search node budget")
      ->capture_default_str();
  app.add_option("--seed", flags.seed, "seed for randomized utilities")
      ->capture_default_str();
  int degree_bound = -1;
  app.add_option("--degree-bound", degree_bound,
                 "degree bound for integer decomposition checks");

  std::string family, in_file, kind, a_ref, b_ref, verify_id;
  bool hat = false, idp_flag = false, assume_idp = false;
  std::string poset_family_spec, graph_family_spec;
  int nmax = 6;
  long rank_filter = -1;
  int max_vertices = -1;

  CLI::App* poset = app.add_subcommand("poset", "build a poset");
  poset->fallthrough();
  poset->add_option("--family", family, "family spec, e.g. Pi2:1,1,1,2");
  poset->add_option("--in", in_file, "poset JSON document");
  poset->add_flag("--hat", hat, "extend DOT output by bottom/top elements");

  CLI::App* graph = app.add_subcommand("graph", "build a graph");
  graph->fallthrough();
  graph->add_option("--family", family, "family spec, e.g. Kst:2,2,1,1");
  graph->add_option("--in", in_file, "graph JSON document");

  CLI::App* polytope =
      app.add_subcommand("polytope", "build a lattice polytope");
  polytope->fallthrough();
  polytope->add_option("--in", in_file, "polytope JSON document");
  polytope->add_option("--family", family,
                       "spec family:<domain>:<name>:<params>");
  polytope->add_option("--poset-family", poset_family_spec,
                       "poset family spec");
  polytope->add_option("--graph-family", graph_family_spec,
                       "graph family spec");
  polytope->add_option("--kind", kind, "order|chain or stable|edge");
  polytope->add_flag("--idp", idp_flag,
                     "attach an integer decomposition certificate");

  CLI::App* classgroup = app.add_subcommand(
      "classgroup", "divisor class group of the toric ring");
  classgroup->fallthrough();
  classgroup->add_option("--in", in_file, "polytope JSON document");
  classgroup->add_option("--family", family,
                         "spec family:<domain>:<name>:<params>");
  classgroup->add_option("--poset-family", poset_family_spec,
                         "poset family spec");
  classgroup->add_option("--graph-family", graph_family_spec,
                         "graph family spec");
  classgroup->add_option("--kind", kind, "order|chain or stable|edge");
  classgroup->add_flag("--assume-idp", assume_idp,
                       "skip the integer decomposition check");

  CLI::App* equiv =
      app.add_subcommand("equiv", "decide unimodular equivalence");
  equiv->fallthrough();
  equiv->add_option("--a", a_ref, "polytope spec or JSON file")->required();
  equiv->add_option("--b", b_ref, "polytope spec or JSON file")->required();

  CLI::App* census =
      app.add_subcommand("census", "classify by class-group rank");
  census->fallthrough();
  census->add_option("--kind", kind, "order, stable or edge")->required();
  census->add_option("--nmax", nmax, "largest size to enumerate")->required();
  census->add_option("--rank", rank_filter, "keep only this rank");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run a registered verification suite");
  verify_cmd->fallthrough();
  verify_cmd->add_option("id", verify_id, "suite id, a group id, or 'all'")
      ->required();
  verify_cmd->add_option("--max-vertices", max_vertices,
                         "override the per-suite size bound");

  CLI11_PARSE(app, argc, argv);
  if (degree_bound >= 0) flags.degree_bound = degree_bound;

  try {
    if (poset->parsed()) return cmd_poset(flags, family, in_file, hat);
    if (graph->parsed()) return cmd_graph(flags, family, in_file);
    if (polytope->parsed())
      return cmd_polytope(
          flags,
          polytope_from_flags(in_file, family, poset_family_spec,
                              graph_family_spec, kind),
          idp_flag);
    if (classgroup->parsed())
      return cmd_classgroup(
          flags,
          polytope_from_flags(in_file, family, poset_family_spec,
                              graph_family_spec, kind),
          assume_idp);
    if (equiv->parsed()) return cmd_equiv(flags, a_ref, b_ref);
    if (census->parsed())
      return cmd_census(flags, kind, nmax,
                        rank_filter >= 0 ? std::optional<long>(rank_filter)
                                         : std::nullopt);
    if (verify_cmd->parsed())
      return cmd_verify(flags, verify_id,
                        max_vertices >= 0 ? std::optional<int>(max_vertices)
                                          : std::nullopt);
  } catch (const SearchBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
