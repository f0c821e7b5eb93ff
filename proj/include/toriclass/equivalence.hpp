#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "toriclass/polytope.hpp"

namespace toriclass {

// Necessary invariants of unimodular equivalence, used to prune the search.
struct Fingerprint {
  std::size_t dim = 0;
  std::size_t vertex_count = 0;
  std::size_t lattice_point_count = 0;
  std::size_t facet_count = 0;
  std::vector<std::size_t> points_per_facet;   // sorted
  std::vector<std::size_t> facets_per_vertex;  // sorted
  Int normalized_volume;

  bool operator==(const Fingerprint&) const = default;
};

inline Fingerprint fingerprint(const LatticePolytope& p) {
  Fingerprint fp;
  fp.dim = p.dim();
  fp.vertex_count = p.vertices().size();
  fp.lattice_point_count = p.lattice_points().size();
  fp.normalized_volume = p.normalized_volume();
  if (p.dim() == 0) {
    fp.facet_count = 0;
    return fp;
  }
  const auto& inc = p.facet_point_incidence();
  fp.facet_count = p.facets().forms.size();
  for (const auto& tight : inc) fp.points_per_facet.push_back(tight.size());
  std::sort(fp.points_per_facet.begin(), fp.points_per_facet.end());
  const auto& forms = p.facets().forms;
  for (const Point& v : p.reduced_vertices()) {
    std::size_t tight = 0;
    for (const FacetForm& f : forms)
      if (f.raw_value(v) == 0) ++tight;
    fp.facets_per_vertex.push_back(tight);
  }
  std::sort(fp.facets_per_vertex.begin(), fp.facets_per_vertex.end());
  return fp;
}

struct EquivWitness {
  IntMatrix matrix;  // unimodular, in reduced coordinates
  std::vector<Int> translation;
};

struct EquivOptions {
  long long budget = 10'000'000;  // search nodes
};

namespace detail {

struct EquivSide {
  std::vector<Point> points;            // reduced lattice points, sorted
  std::vector<std::size_t> vertex_idx;  // indices into points
  // fvals[f][i] = normalized value of facet f at point i
  std::vector<std::vector<Int>> fvals;
  // per point: sorted (facet value, facet tight-count) pairs
  std::vector<std::vector<std::pair<Int, std::size_t>>> profile;

  explicit EquivSide(const LatticePolytope& p) {
    points = p.reduced_lattice_points();
    std::set<Point> verts;
    for (const Point& v : p.reduced_vertices()) verts.insert(v);
    for (std::size_t i = 0; i < points.size(); ++i)
      if (verts.count(points[i])) vertex_idx.push_back(i);
    const auto& forms = p.facets().forms;
    const auto& inc = p.facet_point_incidence();
    fvals.assign(forms.size(), std::vector<Int>(points.size()));
    for (std::size_t f = 0; f < forms.size(); ++f)
      for (std::size_t i = 0; i < points.size(); ++i)
        fvals[f][i] = forms[f].value(points[i]);
    profile.resize(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (std::size_t f = 0; f < forms.size(); ++f)
        profile[i].push_back({fvals[f][i], inc[f].size()});
      std::sort(profile[i].begin(), profile[i].end());
    }
  }
};

inline Int diff_gcd(const Point& a, const Point& b) {
  Int g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) g = gcd_int(g, a[i] - b[i]);
  return g;
}

// Multiset of per-facet value tuples at the listed points; a unimodular map
// sending the point list of one polytope to that of another must match these
// multisets exactly.
inline std::vector<std::vector<Int>> facet_tuples(
    const EquivSide& side, const std::vector<std::size_t>& pts) {
  std::vector<std::vector<Int>> keys;
  keys.reserve(side.fvals.size());
  for (const auto& row : side.fvals) {
    std::vector<Int> key;
    key.reserve(pts.size());
    for (std::size_t i : pts) key.push_back(row[i]);
    keys.push_back(std::move(key));
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace detail

// Searches for an affine unimodular map sending the lattice points of P onto
// those of Q.  Anchors are vertices of P forming an affine basis; candidate
// images are invariant-matched vertices of Q, pruned by the multiset of
// per-facet value tuples over the partial assignment.  Returns the first
// witness in deterministic order, nullopt after exhaustion, and throws
// SearchBudgetExceeded when the node budget runs out.
inline std::optional<EquivWitness> unimodular_equivalent(
    const LatticePolytope& p, const LatticePolytope& q,
    const EquivOptions& opts = {}) {
  if (fingerprint(p) != fingerprint(q)) return std::nullopt;
  const std::size_t r = p.dim();
  if (r == 0) return EquivWitness{IntMatrix(0, 0), {}};

  detail::EquivSide P(p), Q(q);

  // candidate class sizes in Q per profile
  std::map<std::vector<std::pair<Int, std::size_t>>, std::size_t> q_class;
  for (std::size_t i : Q.vertex_idx) q_class[Q.profile[i]]++;
  for (std::size_t i : P.vertex_idx)
    if (q_class.find(P.profile[i]) == q_class.end())
      return std::nullopt;  // some vertex type has no possible image

  // anchor selection: repeatedly take the vertex with the fewest candidate
  // images whose difference grows the affine rank
  std::vector<std::size_t> anchors;
  {
    QRank qr;
    std::vector<bool> used(P.points.size(), false);
    while (anchors.size() < r + 1) {
      std::size_t best = P.points.size();
      for (std::size_t i : P.vertex_idx) {
        if (used[i]) continue;
        if (!anchors.empty()) {
          std::vector<Int> diff(r);
          for (std::size_t j = 0; j < r; ++j)
            diff[j] = P.points[i][j] - P.points[anchors[0]][j];
          if (qr.spans(diff)) continue;
        }
        if (best == P.points.size() ||
            q_class[P.profile[i]] < q_class[P.profile[best]])
          best = i;
      }
      if (best == P.points.size())
        throw Error("internal: vertices fail to span the polytope");
      if (!anchors.empty()) {
        std::vector<Int> diff(r);
        for (std::size_t j = 0; j < r; ++j)
          diff[j] = P.points[best][j] - P.points[anchors[0]][j];
        qr.add(diff);
      }
      used[best] = true;
      anchors.push_back(best);
    }
  }

  long long nodes = 0;
  std::vector<std::size_t> image(anchors.size(), 0);
  std::optional<EquivWitness> found;

  auto try_leaf = [&]() -> bool {
    IntMatrix dp(r, r), dq(r, r);
    for (std::size_t k = 1; k <= r; ++k)
      for (std::size_t j = 0; j < r; ++j) {
        dp(j, k - 1) = P.points[anchors[k]][j] - P.points[anchors[0]][j];
        dq(j, k - 1) = Q.points[image[k]][j] - Q.points[image[0]][j];
      }
    Int det = determinant(dp);
    if (det == 0) return false;
    IntMatrix m = dq * adjugate(dp);
    IntMatrix a(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        if (m(i, j) % det != 0) return false;
        a(i, j) = m(i, j) / det;
      }
    Int da = determinant(a);
    if (da != 1 && da != -1) return false;
    std::vector<Int> t(r);
    {
      std::vector<Int> a_p0 = a.apply(P.points[anchors[0]]);
      for (std::size_t j = 0; j < r; ++j)
        t[j] = Q.points[image[0]][j] - a_p0[j];
    }
    std::set<Point> target(Q.points.begin(), Q.points.end());
    std::set<Point> mapped;
    for (const Point& x : P.points) {
      std::vector<Int> y = a.apply(x);
      for (std::size_t j = 0; j < r; ++j) y[j] += t[j];
      mapped.insert(std::move(y));
    }
    if (mapped != target) return false;
    found = EquivWitness{std::move(a), std::move(t)};
    return true;
  };

  auto rec = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == anchors.size()) return try_leaf();
    if (++nodes > opts.budget)
      throw SearchBudgetExceeded("equivalence search budget exhausted");
    std::size_t pa = anchors[depth];
    std::vector<std::size_t> chosen_p(anchors.begin(),
                                      anchors.begin() + depth + 1);
    for (std::size_t cand : Q.vertex_idx) {
      if (Q.profile[cand] != P.profile[pa]) continue;
      bool ok = true;
      for (std::size_t d2 = 0; d2 < depth && ok; ++d2) {
        if (image[d2] == cand) ok = false;
        if (ok && detail::diff_gcd(P.points[pa], P.points[anchors[d2]]) !=
                      detail::diff_gcd(Q.points[cand], Q.points[image[d2]]))
          ok = false;
      }
      if (!ok) continue;
      image[depth] = cand;
      if (depth >= 1) {
        std::vector<std::size_t> chosen_q(image.begin(),
                                          image.begin() + depth + 1);
        if (detail::facet_tuples(P, chosen_p) !=
            detail::facet_tuples(Q, chosen_q))
          continue;
        // image differences must stay independent
        QRank qr;
        bool indep = true;
        for (std::size_t d2 = 1; d2 <= depth; ++d2) {
          std::vector<Int> diff(r);
          for (std::size_t j = 0; j < r; ++j)
            diff[j] = Q.points[image[d2]][j] - Q.points[image[0]][j];
          if (!qr.add(diff)) {
            indep = false;
            break;
          }
        }
        if (!indep) continue;
      }
      if (self(self, depth + 1)) return true;
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

}  // namespace toriclass
