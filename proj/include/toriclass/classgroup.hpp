#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toriclass/graph.hpp"
#include "toriclass/polytope.hpp"
#include "toriclass/poset.hpp"

namespace toriclass {

// Finitely generated abelian group in invariant-factor form.
struct AbelianGroup {
  long free_rank = 0;
  std::vector<Int> torsion;  // factors > 1, each dividing the next

  bool operator==(const AbelianGroup&) const = default;

  bool torsion_free() const { return torsion.empty(); }

  static AbelianGroup from_factors(long free_rank, std::vector<Int> factors) {
    AbelianGroup g;
    g.free_rank = free_rank;
    for (Int& d : factors)
      if (d > 1) g.torsion.push_back(std::move(d));
    g.canonicalize();
    return g;
  }

  AbelianGroup direct_sum(const AbelianGroup& o) const {
    AbelianGroup g;
    g.free_rank = free_rank + o.free_rank;
    g.torsion = torsion;
    g.torsion.insert(g.torsion.end(), o.torsion.begin(), o.torsion.end());
    g.canonicalize();
    return g;
  }

  std::string to_string() const {
    std::string s;
    if (free_rank > 0) s = "Z^" + std::to_string(free_rank);
    for (const Int& d : torsion) {
      if (!s.empty()) s += " + ";
      s += "Z/" + d.str();
    }
    return s.empty() ? "0" : s;
  }

 private:
  // Rebuild the divisibility chain from the prime-power content.
  void canonicalize() {
    std::map<Int, std::vector<int>> powers;  // prime -> exponents, descending
    for (Int d : torsion) {
      for (Int p = 2; p * p <= d; ++p) {
        if (d % p != 0) continue;
        int e = 0;
        while (d % p == 0) {
          d /= p;
          ++e;
        }
        powers[p].push_back(e);
      }
      if (d > 1) powers[d].push_back(1);
    }
    std::size_t chain_len = 0;
    for (auto& [p, es] : powers) {
      std::sort(es.rbegin(), es.rend());
      chain_len = std::max(chain_len, es.size());
    }
    std::vector<Int> chain(chain_len, 1);
    for (auto& [p, es] : powers)
      for (std::size_t i = 0; i < es.size(); ++i) {
        Int pw = 1;
        for (int t = 0; t < es[i]; ++t) pw *= p;
        chain[i] *= pw;  // chain[0] is the largest factor
      }
    std::reverse(chain.begin(), chain.end());
    torsion = std::move(chain);
  }
};

// Rows are the facet forms, columns the lattice points; entry (f, a) is the
// normalized value of form f at point a.
struct DivisorMatrix {
  IntMatrix m;
};

inline DivisorMatrix divisor_matrix(const LatticePolytope& p) {
  const auto& forms = p.facets().forms;
  const auto& pts = p.reduced_lattice_points();
  DivisorMatrix dm;
  dm.m = IntMatrix(forms.size(), pts.size());
  for (std::size_t f = 0; f < forms.size(); ++f)
    for (std::size_t a = 0; a < pts.size(); ++a)
      dm.m(f, a) = forms[f].value(pts[a]);
  return dm;
}

struct ClassGroupOptions {
  bool assume_idp = false;
  std::optional<int> idp_degree_bound;
};

namespace detail {

inline void require_idp(const LatticePolytope& p,
                        const ClassGroupOptions& opts) {
  if (opts.assume_idp) return;
  IdpCertificate cert = is_idp(p, opts.idp_degree_bound);
  if (cert.verdict == IdpCertificate::Verdict::not_idp)
    throw NotIdp("polytope lacks the integer decomposition property");
  if (cert.verdict == IdpCertificate::Verdict::inconclusive)
    throw NotIdp("integer decomposition check inconclusive at this bound");
}

inline void require_generating(const LatticePolytope& p) {
  AffineLatticeBasis span = affine_lattice_span(p.reduced_lattice_points());
  if (span.rank() != p.dim() || span.lattice_index() != 1)
    throw LatticeDeficient(
        "lattice points do not affinely generate the reduced lattice");
}

}  // namespace detail

inline AbelianGroup class_group(const LatticePolytope& p,
                                const ClassGroupOptions& opts = {}) {
  if (p.dim() == 0) return AbelianGroup{};
  detail::require_idp(p, opts);
  detail::require_generating(p);
  DivisorMatrix dm = divisor_matrix(p);
  SmithForm s = smith_normal_form(dm.m);
  long free_rank = static_cast<long>(dm.m.rows()) - static_cast<long>(s.rank);
  return AbelianGroup::from_factors(free_rank, s.invariant_factors);
}

// Rank shortcut: number of facets minus (dim + 1); no Smith form needed.
inline long class_group_rank(const LatticePolytope& p,
                             const ClassGroupOptions& opts = {}) {
  if (p.dim() == 0) return 0;
  detail::require_idp(p, opts);
  return static_cast<long>(p.facets().forms.size()) -
         (static_cast<long>(p.dim()) + 1);
}

// Hasse-edge count of the bottom/top extension minus d minus 1.
inline long shortcut_rank(const Poset& p) { return hibi_rank(p); }

// Number of maximal cliques minus one, for perfect graphs.
inline long shortcut_rank_stable(const SimpleGraph& g) {
  if (!is_perfect(g)) throw NotPerfect("stable-set rank shortcut needs a perfect graph");
  return static_cast<long>(maximal_cliques(g).size()) - 1;
}

// |Psi| - dim of the edge ring, for connected graphs with the odd cycle
// condition.
inline long shortcut_rank_edge(const SimpleGraph& g) {
  if (!g.connected()) throw Disconnected("edge rank shortcut needs a connected graph");
  if (!odd_cycle_condition(g))
    throw OddCycleConditionFails("edge rank shortcut needs the odd cycle condition");
  if (g.size() == 2) return 0;  // a single edge: the ring is polynomial
  VertexStatus st = vertex_status(g);
  long psi = 0;
  for (int v = 0; v < g.size(); ++v)
    if (st.bipartite ? st.ordinary[v] : st.regular[v]) ++psi;
  psi += static_cast<long>(special_sets(g).size());
  long dim_ring = g.size() - (st.bipartite ? 1 : 0);
  return psi - dim_ring;
}

inline long shortcut_rank(const SimpleGraph& g, GraphPolytopeKind kind) {
  return kind == GraphPolytopeKind::stable_set ? shortcut_rank_stable(g)
                                               : shortcut_rank_edge(g);
}

}  // namespace toriclass
