#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "toriclass/errors.hpp"
#include "toriclass/polytope.hpp"

namespace toriclass {

// Finite poset on elements 0..n-1, stored by covering relations; the strict
// order is kept as bitmasks of the transitive closure.
class Poset {
 public:
  // rels: pairs (i, j) meaning element i is strictly below element j.
  // Throws BadParams on cycles.  Covers are recomputed (irredundant).
  static Poset from_relations(int n, std::vector<std::pair<int, int>> rels) {
    if (n < 0 || n > 30) throw BadParams("poset size out of range");
    Poset p;
    p.n_ = n;
    p.below_.assign(n, 0);
    std::vector<std::uint32_t> direct(n, 0);
    for (auto [i, j] : rels) {
      if (i < 0 || i >= n || j < 0 || j >= n || i == j)
        throw BadParams("bad poset relation");
      direct[j] |= (1u << i);
    }
    // closure via repeated propagation; cycle check afterwards
    bool changed = true;
    p.below_ = direct;
    while (changed) {
      changed = false;
      for (int j = 0; j < n; ++j) {
        std::uint32_t acc = p.below_[j];
        for (int i = 0; i < n; ++i)
          if (p.below_[j] & (1u << i)) acc |= p.below_[i];
        if (acc != p.below_[j]) {
          p.below_[j] = acc;
          changed = true;
        }
      }
    }
    for (int i = 0; i < n; ++i)
      if (p.below_[i] & (1u << i)) throw BadParams("poset relation has a cycle");
    p.finish();
    return p;
  }

  int size() const { return n_; }

  bool less(int i, int j) const { return (below_[j] >> i) & 1u; }
  bool comparable(int i, int j) const { return less(i, j) || less(j, i); }
  std::uint32_t strictly_below(int j) const { return below_[j]; }
  std::uint32_t strictly_above(int i) const { return above_[i]; }

  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  std::vector<int> minimal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (below_[i] == 0) out.push_back(i);
    return out;
  }

  std::vector<int> maximal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (above_[i] == 0) out.push_back(i);
    return out;
  }

  // Down-closed subsets as bitmasks, enumerated over a linear extension.
  std::vector<std::uint32_t> ideals() const {
    std::vector<int> order = topological_order();
    std::vector<std::uint32_t> out;
    enumerate_rec(order, 0, 0, out, /*antichains=*/false);
    return out;
  }

  std::vector<std::uint32_t> antichains() const {
    std::vector<int> order = topological_order();
    std::vector<std::uint32_t> out;
    enumerate_rec(order, 0, 0, out, /*antichains=*/true);
    return out;
  }

  // Maximal chains, as bitmasks.
  std::vector<std::uint32_t> maximal_chains() const {
    std::vector<std::uint32_t> out;
    for (int i : minimal_elements()) chains_rec(i, 1u << i, out);
    return out;
  }

  // New element on top of the down-set closure of `mask`, used by the
  // census generator: every poset arises by stacking maximal elements.
  Poset with_maximal_element(std::uint32_t down_set) const {
    std::vector<std::pair<int, int>> rels;
    for (int j = 0; j < n_; ++j)
      for (int i = 0; i < n_; ++i)
        if (less(i, j)) rels.push_back({i, j});
    for (int i = 0; i < n_; ++i)
      if (down_set & (1u << i)) rels.push_back({i, n_});
    return from_relations(n_ + 1, std::move(rels));
  }

  // Hasse edge count of the poset extended by a global bottom and top.
  int hat_hasse_edge_count() const {
    return static_cast<int>(covers_.size() + minimal_elements().size() +
                            maximal_elements().size());
  }

  bool operator==(const Poset& o) const {
    return n_ == o.n_ && below_ == o.below_;
  }

 private:
  void finish() {
    above_.assign(n_, 0);
    for (int j = 0; j < n_; ++j)
      for (int i = 0; i < n_; ++i)
        if (less(i, j)) above_[i] |= (1u << j);
    covers_.clear();
    for (int j = 0; j < n_; ++j)
      for (int i = 0; i < n_; ++i) {
        if (!less(i, j)) continue;
        std::uint32_t between = below_[j] & above_[i];
        if (between == 0) covers_.push_back({i, j});
      }
    std::sort(covers_.begin(), covers_.end());
  }

  std::vector<int> topological_order() const {
    std::vector<int> order;
    std::vector<bool> used(n_, false);
    for (int step = 0; step < n_; ++step)
      for (int i = 0; i < n_; ++i) {
        if (used[i]) continue;
        bool ready = true;
        for (int k = 0; k < n_; ++k)
          if (!used[k] && less(k, i)) ready = false;
        if (ready) {
          used[i] = true;
          order.push_back(i);
          break;
        }
      }
    return order;
  }

  void enumerate_rec(const std::vector<int>& order, std::size_t pos,
                     std::uint32_t mask, std::vector<std::uint32_t>& out,
                     bool antichains) const {
    if (pos == order.size()) {
      out.push_back(mask);
      return;
    }
    int e = order[pos];
    enumerate_rec(order, pos + 1, mask, out, antichains);
    bool ok;
    if (antichains) {
      std::uint32_t comp = below_[e] | above_[e];
      ok = (mask & comp) == 0;
    } else {
      ok = (below_[e] & ~mask) == 0;
    }
    if (ok) enumerate_rec(order, pos + 1, mask | (1u << e), out, antichains);
  }

  void chains_rec(int last, std::uint32_t mask,
                  std::vector<std::uint32_t>& out) const {
    bool extended = false;
    for (int j = 0; j < n_; ++j)
      if (less(last, j) && (below_[j] & above_[last]) == 0) {
        extended = true;
        chains_rec(j, mask | (1u << j), out);
      }
    if (!extended) out.push_back(mask);
  }

  int n_ = 0;
  std::vector<std::uint32_t> below_;  // below_[j] = mask of i with i < j
  std::vector<std::uint32_t> above_;
  std::vector<std::pair<int, int>> covers_;
};

struct HatPoset {
  Poset base;
  int hasse_edge_count = 0;
};

inline HatPoset make_hat(const Poset& p) {
  return HatPoset{p, p.hat_hasse_edge_count()};
}

// Rank of the divisor class group of the order-polytope toric ring,
// read off the Hasse diagram of the bottom/top extension.
inline long hibi_rank(const Poset& p) {
  return make_hat(p).hasse_edge_count - p.size() - 1;
}

enum class PosetFamily { pi1, pi2, pi3, pi4 };

// The four parametric posets; labels are 1-based in the interfaces and map
// to internal elements 0..d-1 in order.
inline Poset poset_family(PosetFamily kind, const std::vector<long>& params) {
  auto chain = [](std::vector<std::pair<int, int>>& rels, int from, int to) {
    for (int i = from; i < to; ++i) rels.push_back({i, i + 1});
  };
  switch (kind) {
    case PosetFamily::pi1: {
      if (params.size() != 2) throw BadParams("Pi1 takes (s1, s2)");
      long s1 = params[0], s2 = params[1];
      if (s1 < 1 || s2 < 1) throw BadParams("Pi1 needs s1, s2 >= 1");
      std::vector<std::pair<int, int>> rels;
      chain(rels, 0, static_cast<int>(s1) - 1);
      chain(rels, static_cast<int>(s1), static_cast<int>(s1 + s2) - 1);
      return Poset::from_relations(static_cast<int>(s1 + s2), rels);
    }
    case PosetFamily::pi2: {
      if (params.size() != 4) throw BadParams("Pi2 takes (s1, s2, s3, t)");
      long s1 = params[0], s2 = params[1], s3 = params[2], t = params[3];
      if (s1 < 1 || s2 < 1 || s3 < 1 || t < 0)
        throw BadParams("Pi2 needs s1, s2, s3 >= 1 and t >= 0");
      int d = static_cast<int>(s1 + s2 + s3 + t);
      std::vector<std::pair<int, int>> rels;
      chain(rels, 0, static_cast<int>(t) - 1);
      chain(rels, static_cast<int>(t), static_cast<int>(t + s1) - 1);
      chain(rels, static_cast<int>(t + s1), static_cast<int>(t + s1 + s2) - 1);
      if (t > 0) {
        rels.push_back({static_cast<int>(t) - 1, static_cast<int>(t)});
        rels.push_back({static_cast<int>(t) - 1, static_cast<int>(t + s1)});
      }
      chain(rels, static_cast<int>(t + s1 + s2), d - 1);
      return Poset::from_relations(d, rels);
    }
    case PosetFamily::pi3: {
      if (params.size() != 5)
        throw BadParams("Pi3 takes (s1, s2, t1, t2, t3)");
      long s1 = params[0], s2 = params[1], t1 = params[2], t2 = params[3],
           t3 = params[4];
      if (s1 < 1 || s2 < 1 || t1 < 1 || t2 < 1 || t3 < 0)
        throw BadParams("Pi3 needs s1, s2, t1, t2 >= 1 and t3 >= 0");
      int d = static_cast<int>(s1 + s2 + t1 + t2 + t3);
      std::vector<std::pair<int, int>> rels;
      // chain of length t1 continuing into the s1 chain
      chain(rels, 0, static_cast<int>(t1 + s1) - 1);
      // chain of length s2 continuing into the t2 chain
      chain(rels, static_cast<int>(t1 + s1),
            static_cast<int>(t1 + s1 + s2 + t2) - 1);
      // bridge of t3 elements from the top of the t1 chain to the bottom of
      // the t2 chain
      int t1_top = static_cast<int>(t1) - 1;
      int t2_bottom = static_cast<int>(t1 + s1 + s2);
      int bridge_start = static_cast<int>(t1 + s1 + s2 + t2);
      if (t3 == 0) {
        rels.push_back({t1_top, t2_bottom});
      } else {
        rels.push_back({t1_top, bridge_start});
        chain(rels, bridge_start, d - 1);
        rels.push_back({d - 1, t2_bottom});
      }
      return Poset::from_relations(d, rels);
    }
    case PosetFamily::pi4: {
      if (params.size() != 4) throw BadParams("Pi4 takes (s1, s2, t1, t2)");
      long s1 = params[0], s2 = params[1], t1 = params[2], t2 = params[3];
      if (s1 < 1 || s2 < 1 || t1 < 1 || t2 < 1)
        throw BadParams("Pi4 needs all parameters >= 1");
      int d = static_cast<int>(s1 + s2 + t1 + t2);
      int center = d;  // element d+1 in 1-based labels
      std::vector<std::pair<int, int>> rels;
      chain(rels, 0, static_cast<int>(t1) - 1);
      rels.push_back({static_cast<int>(t1) - 1, center});
      chain(rels, static_cast<int>(t1), static_cast<int>(t1 + t2) - 1);
      rels.push_back({static_cast<int>(t1 + t2) - 1, center});
      rels.push_back({center, static_cast<int>(t1 + t2)});
      chain(rels, static_cast<int>(t1 + t2),
            static_cast<int>(t1 + t2 + s1) - 1);
      rels.push_back({center, static_cast<int>(t1 + t2 + s1)});
      chain(rels, static_cast<int>(t1 + t2 + s1), d - 1);
      return Poset::from_relations(d + 1, rels);
    }
  }
  throw BadParams("unknown poset family");
}

// Five-element subposet with a middle element, two incomparable elements
// strictly below it and two strictly above.
inline bool contains_x_shape(const Poset& p) {
  const int n = p.size();
  for (int m = 0; m < n; ++m) {
    std::vector<int> lo, hi;
    for (int i = 0; i < n; ++i) {
      if (p.less(i, m)) lo.push_back(i);
      if (p.less(m, i)) hi.push_back(i);
    }
    bool lo_pair = false, hi_pair = false;
    for (std::size_t a = 0; a < lo.size() && !lo_pair; ++a)
      for (std::size_t b = a + 1; b < lo.size(); ++b)
        if (!p.comparable(lo[a], lo[b])) lo_pair = true;
    for (std::size_t a = 0; a < hi.size() && !hi_pair; ++a)
      for (std::size_t b = a + 1; b < hi.size(); ++b)
        if (!p.comparable(hi[a], hi[b])) hi_pair = true;
    if (lo_pair && hi_pair) return true;
  }
  return false;
}

enum class PosetPolytopeKind { order, chain };

inline LatticePolytope poset_polytope(const Poset& p, PosetPolytopeKind kind) {
  std::vector<std::uint32_t> masks = (kind == PosetPolytopeKind::order)
                                         ? p.ideals()
                                         : p.antichains();
  std::vector<Point> pts;
  pts.reserve(masks.size());
  for (std::uint32_t m : masks) {
    Point x(p.size());
    for (int i = 0; i < p.size(); ++i) x[i] = (m >> i) & 1u;
    pts.push_back(std::move(x));
  }
  return LatticePolytope::from_points(std::move(pts), p.size());
}

}  // namespace toriclass
