#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "toriclass/errors.hpp"
#include "toriclass/lattice.hpp"

namespace toriclass {

// Affine form x -> (<normal, x> + offset) / divisor in the coordinates of the
// full-dimensional representative.  (normal, offset) is primitive; divisor is
// the gcd of the raw values over the polytope's lattice points.
struct FacetForm {
  std::vector<Int> normal;
  Int offset;
  Int divisor = 1;

  Int raw_value(const Point& reduced) const {
    Int v = offset;
    for (std::size_t i = 0; i < normal.size(); ++i)
      v += normal[i] * reduced[i];
    return v;
  }

  Int value(const Point& reduced) const { return raw_value(reduced) / divisor; }

  bool operator==(const FacetForm&) const = default;
  bool operator<(const FacetForm& o) const {
    if (normal != o.normal) return normal < o.normal;
    if (offset != o.offset) return offset < o.offset;
    return divisor < o.divisor;
  }
};

struct FacetSystem {
  std::vector<FacetForm> forms;
};

struct IdpCertificate {
  enum class Verdict { idp, not_idp, inconclusive };
  Verdict verdict = Verdict::idp;
  Point witness;          // ambient coordinates, set when not_idp
  int witness_degree = 0;
  int degree_checked = 0;

  bool is_idp() const { return verdict == Verdict::idp; }
};

namespace detail {

inline void make_primitive(std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd_int(g, x);
  if (g > 1)
    for (Int& x : v) x /= g;
}

struct Ray {
  std::vector<Int> v;
  std::vector<std::uint64_t> zero;  // tight constraints among processed ones

  bool zero_contains(const std::vector<std::uint64_t>& other) const {
    for (std::size_t i = 0; i < zero.size(); ++i)
      if ((other[i] & ~zero[i]) != 0) return false;
    return true;
  }
};

// Facet inequalities of the cone spanned by (p, 1) for full-dimensional point
// sets: the extreme rays of {y : <(p,1), y> >= 0 for all p} are the facet
// forms of conv(points).  Classic double description with the combinatorial
// adjacency test; valid here because the intermediate cones stay pointed.
inline std::vector<FacetForm> dual_description(const std::vector<Point>& pts,
                                               std::size_t dim) {
  const std::size_t m = dim + 1;
  std::vector<std::vector<Int>> gens;
  gens.reserve(pts.size());
  for (const Point& p : pts) {
    std::vector<Int> g = p;
    g.push_back(1);
    gens.push_back(std::move(g));
  }

  QRank qr;
  std::vector<std::size_t> base;
  std::vector<bool> in_base(gens.size(), false);
  for (std::size_t i = 0; i < gens.size() && base.size() < m; ++i)
    if (qr.add(gens[i])) {
      base.push_back(i);
      in_base[i] = true;
    }
  if (base.size() != m)
    throw Error("dual_description: points do not span the stated dimension");

  const std::size_t words = (gens.size() + 63) / 64;
  auto bit_set = [&](std::vector<std::uint64_t>& z, std::size_t i) {
    z[i / 64] |= (std::uint64_t{1} << (i % 64));
  };

  IntMatrix gb(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) gb(i, j) = gens[base[i]][j];
  IntMatrix adj = adjugate(gb);
  if (determinant(gb) < 0)
    for (std::size_t j = 0; j < m; ++j) adj.negate_col(j);

  std::vector<Ray> rays;
  for (std::size_t j = 0; j < m; ++j) {
    Ray r;
    r.v.resize(m);
    for (std::size_t i = 0; i < m; ++i) r.v[i] = adj(i, j);
    make_primitive(r.v);
    r.zero.assign(words, 0);
    for (std::size_t i = 0; i < m; ++i)
      if (i != j) bit_set(r.zero, base[i]);
    rays.push_back(std::move(r));
  }

  auto dot = [](const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  };

  for (std::size_t c = 0; c < gens.size(); ++c) {
    if (in_base[c]) continue;
    std::vector<Int> vals(rays.size());
    bool any_neg = false;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      vals[i] = dot(gens[c], rays[i].v);
      if (vals[i] < 0) any_neg = true;
    }
    if (!any_neg) {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (vals[i] == 0) bit_set(rays[i].zero, c);
      continue;
    }

    std::vector<Ray> next;
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (vals[i] > 0)
        pos.push_back(i);
      else if (vals[i] < 0)
        neg.push_back(i);
      if (vals[i] >= 0) {
        Ray kept = rays[i];
        if (vals[i] == 0) bit_set(kept.zero, c);
        next.push_back(std::move(kept));
      }
    }
    for (std::size_t u : pos)
      for (std::size_t w : neg) {
        std::vector<std::uint64_t> common(words);
        std::size_t tight = 0;
        for (std::size_t t = 0; t < words; ++t) {
          common[t] = rays[u].zero[t] & rays[w].zero[t];
          tight += static_cast<std::size_t>(std::popcount(common[t]));
        }
        if (tight + 2 < m) continue;
        bool adjacent = true;
        for (std::size_t x = 0; x < rays.size() && adjacent; ++x) {
          if (x == u || x == w) continue;
          if (rays[x].zero_contains(common)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray nr;
        nr.v.resize(m);
        for (std::size_t t = 0; t < m; ++t)
          nr.v[t] = vals[u] * rays[w].v[t] - vals[w] * rays[u].v[t];
        make_primitive(nr.v);
        nr.zero = std::move(common);
        bit_set(nr.zero, c);
        next.push_back(std::move(nr));
      }
    rays = std::move(next);
  }

  std::vector<FacetForm> forms;
  forms.reserve(rays.size());
  for (Ray& r : rays) {
    FacetForm f;
    f.offset = r.v.back();
    r.v.pop_back();
    f.normal = std::move(r.v);
    forms.push_back(std::move(f));
  }
  std::sort(forms.begin(), forms.end());
  return forms;
}

}  // namespace detail

class LatticePolytope {
 public:
  static LatticePolytope from_points(std::vector<Point> points,
                                     std::size_t ambient_dim) {
    if (points.empty()) throw BadParams("polytope needs at least one point");
    for (const Point& p : points)
      if (p.size() != ambient_dim)
        throw BadParams("point length does not match ambient dimension");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    auto st = std::make_shared<State>();
    st->ambient_dim = ambient_dim;
    st->generators = std::move(points);
    st->reduction = affine_lattice_saturation(st->generators);
    st->reduced_generators.reserve(st->generators.size());
    for (const Point& p : st->generators) {
      auto c = st->reduction.coordinates(p);
      if (!c)
        throw Error("internal: generator escapes its saturated lattice");
      st->reduced_generators.push_back(std::move(*c));
    }
    LatticePolytope poly;
    poly.s_ = std::move(st);
    return poly;
  }

  std::size_t ambient_dim() const { return s_->ambient_dim; }
  std::size_t dim() const { return s_->reduction.rank(); }
  const AffineLatticeBasis& reduction() const { return s_->reduction; }
  const std::vector<Point>& generators() const { return s_->generators; }
  const std::vector<Point>& reduced_generators() const {
    return s_->reduced_generators;
  }

  const FacetSystem& facets() const {
    if (dim() == 0)
      throw DegeneratePolytope("a 0-dimensional polytope has no facets");
    ensure_points();
    return s_->facets;
  }

  // Vertices in ambient coordinates, lexicographically sorted.
  const std::vector<Point>& vertices() const {
    ensure_hull();
    return s_->vertices;
  }

  std::vector<Point> reduced_vertices() const {
    ensure_hull();
    std::vector<Point> out;
    out.reserve(s_->vertex_indices.size());
    for (std::size_t i : s_->vertex_indices)
      out.push_back(s_->reduced_generators[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

  // All lattice points, ambient coordinates, lexicographically sorted.
  const std::vector<Point>& lattice_points() const {
    ensure_points();
    return s_->ambient_points;
  }

  // Same point set in reduced coordinates; this ordering indexes the facet
  // incidence lists and the divisor matrix columns.
  const std::vector<Point>& reduced_lattice_points() const {
    ensure_points();
    return s_->reduced_points;
  }

  // facet_point_incidence()[f] = indices into reduced_lattice_points()
  const std::vector<std::vector<std::size_t>>& facet_point_incidence() const {
    ensure_points();
    return s_->incidence;
  }

  const Int& normalized_volume() const {
    ensure_volume();
    return s_->volume;
  }

  Point lift(const std::vector<Int>& reduced) const {
    return s_->reduction.to_ambient(reduced);
  }

  bool contains(const Point& ambient) const {
    auto c = s_->reduction.coordinates(ambient);
    if (!c) return false;
    if (dim() == 0) return true;
    ensure_hull();
    for (const FacetForm& f : s_->facets.forms)
      if (f.raw_value(*c) < 0) return false;
    return true;
  }

 private:
  struct State {
    std::size_t ambient_dim = 0;
    std::vector<Point> generators;          // sorted, deduplicated
    std::vector<Point> reduced_generators;  // parallel to generators
    AffineLatticeBasis reduction;

    std::mutex mutex;
    bool hull_done = false;
    FacetSystem facets;
    std::vector<std::size_t> vertex_indices;  // into generators
    std::vector<Point> vertices;              // ambient, sorted

    bool points_done = false;
    std::vector<Point> reduced_points;  // sorted
    std::vector<Point> ambient_points;  // sorted
    std::vector<std::vector<std::size_t>> incidence;

    bool volume_done = false;
    Int volume;
  };

  void ensure_hull() const {
    State& st = *s_;
    std::lock_guard<std::mutex> lock(st.mutex);
    if (st.hull_done) return;
    const std::size_t r = st.reduction.rank();
    if (r == 0) {
      st.vertex_indices = {0};
      st.vertices = {st.generators.front()};
      st.hull_done = true;
      return;
    }
    st.facets.forms = detail::dual_description(st.reduced_generators, r);
    for (std::size_t i = 0; i < st.reduced_generators.size(); ++i) {
      QRank qr;
      std::size_t tight = 0;
      for (const FacetForm& f : st.facets.forms)
        if (f.raw_value(st.reduced_generators[i]) == 0) {
          ++tight;
          qr.add(f.normal);
        }
      if (tight >= r && qr.rank() == r) st.vertex_indices.push_back(i);
    }
    for (std::size_t i : st.vertex_indices)
      st.vertices.push_back(st.generators[i]);
    std::sort(st.vertices.begin(), st.vertices.end());
    st.hull_done = true;
  }

  void ensure_points() const {
    ensure_hull();
    State& st = *s_;
    std::lock_guard<std::mutex> lock(st.mutex);
    if (st.points_done) return;
    const std::size_t r = st.reduction.rank();
    if (r == 0) {
      st.reduced_points = {Point{}};
      st.ambient_points = {st.generators.front()};
      st.points_done = true;
      return;
    }
    std::vector<Int> lo(r), hi(r);
    for (std::size_t j = 0; j < r; ++j) {
      lo[j] = hi[j] = st.reduced_generators.front()[j];
      for (const Point& p : st.reduced_generators) {
        if (p[j] < lo[j]) lo[j] = p[j];
        if (p[j] > hi[j]) hi[j] = p[j];
      }
    }
    Int cells = 1;
    for (std::size_t j = 0; j < r; ++j) {
      cells *= hi[j] - lo[j] + 1;
      if (cells > 100000000)
        throw TooLarge("lattice point scan box exceeds 1e8 cells");
    }
    Point cur = lo;
    for (;;) {
      bool inside = true;
      for (const FacetForm& f : st.facets.forms)
        if (f.raw_value(cur) < 0) {
          inside = false;
          break;
        }
      if (inside) st.reduced_points.push_back(cur);
      std::size_t j = r;
      while (j > 0) {
        --j;
        if (cur[j] < hi[j]) {
          ++cur[j];
          for (std::size_t t = j + 1; t < r; ++t) cur[t] = lo[t];
          break;
        }
        if (j == 0) {
          j = r + 1;
          break;
        }
      }
      if (j == r + 1) break;
    }
    // scan order above is already lexicographic
    for (FacetForm& f : st.facets.forms) {
      Int g = 0;
      for (const Point& p : st.reduced_points) {
        g = gcd_int(g, f.raw_value(p));
        if (g == 1) break;
      }
      f.divisor = (g == 0) ? 1 : g;
    }
    st.incidence.assign(st.facets.forms.size(), {});
    for (std::size_t fi = 0; fi < st.facets.forms.size(); ++fi)
      for (std::size_t pi = 0; pi < st.reduced_points.size(); ++pi)
        if (st.facets.forms[fi].raw_value(st.reduced_points[pi]) == 0)
          st.incidence[fi].push_back(pi);
    st.ambient_points.reserve(st.reduced_points.size());
    for (const Point& p : st.reduced_points)
      st.ambient_points.push_back(st.reduction.to_ambient(p));
    std::sort(st.ambient_points.begin(), st.ambient_points.end());
    st.points_done = true;
  }

  static Int volume_rec(const std::vector<Point>& pts,
                        const std::vector<std::size_t>& ids,
                        std::map<std::vector<std::size_t>, Int>& memo) {
    auto it = memo.find(ids);
    if (it != memo.end()) return it->second;
    AffineLatticeBasis basis = affine_lattice_saturation(pts);
    const std::size_t r = basis.rank();
    Int vol;
    if (r == 0) {
      vol = 1;
    } else {
      std::vector<Point> red;
      red.reserve(pts.size());
      for (const Point& p : pts) red.push_back(*basis.coordinates(p));
      std::vector<FacetForm> forms = detail::dual_description(red, r);
      const Point& apex = red.front();
      vol = 0;
      for (const FacetForm& f : forms) {
        Int h = f.raw_value(apex);
        if (h == 0) continue;
        std::vector<Point> sub;
        std::vector<std::size_t> sub_ids;
        for (std::size_t i = 0; i < red.size(); ++i)
          if (f.raw_value(red[i]) == 0) {
            sub.push_back(red[i]);
            sub_ids.push_back(ids[i]);
          }
        vol += h * volume_rec(sub, sub_ids, memo);
      }
    }
    memo.emplace(ids, vol);
    return vol;
  }

  void ensure_volume() const {
    ensure_hull();
    State& st = *s_;
    std::lock_guard<std::mutex> lock(st.mutex);
    if (st.volume_done) return;
    std::vector<Point> verts;
    for (std::size_t i : st.vertex_indices)
      verts.push_back(st.reduced_generators[i]);
    std::sort(verts.begin(), verts.end());
    std::vector<std::size_t> ids(verts.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    std::map<std::vector<std::size_t>, Int> memo;
    st.volume = volume_rec(verts, ids, memo);
    st.volume_done = true;
  }

  std::shared_ptr<State> s_;
};

inline LatticePolytope pyramid(const LatticePolytope& p) {
  const std::size_t d = p.ambient_dim();
  std::vector<Point> pts;
  pts.reserve(p.generators().size() + 1);
  for (Point g : p.generators()) {
    g.push_back(0);
    pts.push_back(std::move(g));
  }
  Point apex(d + 1, 0);
  apex[d] = 1;
  pts.push_back(std::move(apex));
  return LatticePolytope::from_points(std::move(pts), d + 1);
}

// Strips apexes while some vertex v sits at lattice height 1 over a facet
// containing every other vertex; the result is the pyramid-free core.
inline std::pair<LatticePolytope, int> pyramid_reduce(LatticePolytope p) {
  int apex_count = 0;
  for (;;) {
    if (p.dim() == 0) return {p, apex_count};
    const auto& forms = p.facets().forms;
    std::vector<Point> rverts = p.reduced_vertices();
    bool stripped = false;
    for (const FacetForm& f : forms) {
      std::size_t off_index = rverts.size();
      bool unique_off = true;
      for (std::size_t i = 0; i < rverts.size() && unique_off; ++i) {
        if (f.raw_value(rverts[i]) == 0) continue;
        if (off_index != rverts.size()) unique_off = false;
        off_index = i;
      }
      if (!unique_off || off_index == rverts.size()) continue;
      if (f.raw_value(rverts[off_index]) != 1) continue;
      std::vector<Point> base;
      for (std::size_t i = 0; i < rverts.size(); ++i)
        if (i != off_index) base.push_back(p.lift(rverts[i]));
      p = LatticePolytope::from_points(std::move(base), p.ambient_dim());
      ++apex_count;
      stripped = true;
      break;
    }
    if (!stripped) return {p, apex_count};
  }
}

// Checks that every point of nP is a point of (n-1)P plus a point of P for
// n = 2..degree_bound.  Degrees >= dim(P) - 1 always decompose, so the
// default bound of dim(P) certifies the property outright; a smaller
// user-supplied bound yields an inconclusive verdict.
inline IdpCertificate is_idp(const LatticePolytope& p,
                             std::optional<int> degree_bound = std::nullopt) {
  IdpCertificate cert;
  const std::size_t r = p.dim();
  const int bound = degree_bound.value_or(static_cast<int>(r));
  cert.degree_checked = bound;
  if (r == 0) return cert;

  const auto& forms = p.facets().forms;
  const std::vector<Point>& base = p.reduced_lattice_points();
  std::vector<Int> lo(r), hi(r);
  const std::vector<Point> rverts = p.reduced_vertices();
  for (std::size_t j = 0; j < r; ++j) {
    lo[j] = hi[j] = rverts.front()[j];
    for (const Point& v : rverts) {
      if (v[j] < lo[j]) lo[j] = v[j];
      if (v[j] > hi[j]) hi[j] = v[j];
    }
  }

  auto in_dilate = [&](const Point& x, int n) {
    for (const FacetForm& f : forms) {
      Int v = f.offset * n;
      for (std::size_t i = 0; i < r; ++i) v += f.normal[i] * x[i];
      if (v < 0) return false;
    }
    return true;
  };

  for (int n = 2; n <= bound; ++n) {
    std::vector<Int> nlo(r), nhi(r);
    for (std::size_t j = 0; j < r; ++j) {
      nlo[j] = lo[j] * n;
      nhi[j] = hi[j] * n;
    }
    Point cur = nlo;
    for (;;) {
      if (in_dilate(cur, n)) {
        bool decomposes = false;
        Point diff(r);
        for (const Point& b : base) {
          for (std::size_t j = 0; j < r; ++j) diff[j] = cur[j] - b[j];
          if (in_dilate(diff, n - 1)) {
            decomposes = true;
            break;
          }
        }
        if (!decomposes) {
          cert.verdict = IdpCertificate::Verdict::not_idp;
          cert.witness_degree = n;
          Point ambient = p.reduction().origin();
          for (std::size_t j = 0; j < ambient.size(); ++j)
            ambient[j] *= n;
          for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < ambient.size(); ++j)
              ambient[j] += cur[i] * p.reduction().basis()(i, j);
          cert.witness = std::move(ambient);
          return cert;
        }
      }
      std::size_t j = r;
      bool done = false;
      while (j > 0) {
        --j;
        if (cur[j] < nhi[j]) {
          ++cur[j];
          for (std::size_t t = j + 1; t < r; ++t) cur[t] = nlo[t];
          break;
        }
        if (j == 0) done = true;
      }
      if (done) break;
    }
  }
  if (bound + 1 < static_cast<int>(r))
    cert.verdict = IdpCertificate::Verdict::inconclusive;
  return cert;
}

}  // namespace toriclass
