#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "toriclass/graph.hpp"
#include "toriclass/poset.hpp"

namespace toriclass {

namespace detail {

// Canonical form of a binary relation on up to 8 vertices, packed row-major
// into a 64-bit key; works for graphs (symmetric) and poset closures
// (directed).  Individualization-refinement with exhaustive backtracking
// over the refined cells; the minimum key over admissible labelings is
// canonical.
class RelationCanonicalizer {
 public:
  RelationCanonicalizer(int n, const std::vector<std::uint32_t>& out_rows)
      : n_(n), out_(out_rows) {
    in_.assign(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if ((out_[i] >> j) & 1u) in_[j] |= (1u << i);
  }

  std::uint64_t canonical_key() {
    best_set_ = false;
    std::vector<int> colors(n_, 0);
    refine(colors);
    search(colors);
    return best_;
  }

 private:
  using Sig = std::vector<long>;

  void refine(std::vector<int>& colors) const {
    for (;;) {
      std::vector<std::pair<std::pair<int, Sig>, int>> keyed(n_);
      for (int v = 0; v < n_; ++v) {
        Sig sig;
        std::map<int, int> out_cnt, in_cnt;
        for (int w = 0; w < n_; ++w) {
          if ((out_[v] >> w) & 1u) out_cnt[colors[w]]++;
          if ((in_[v] >> w) & 1u) in_cnt[colors[w]]++;
        }
        for (auto [c, k] : out_cnt) {
          sig.push_back(c);
          sig.push_back(k);
        }
        sig.push_back(-1);
        for (auto [c, k] : in_cnt) {
          sig.push_back(c);
          sig.push_back(k);
        }
        keyed[v] = {{colors[v], std::move(sig)}, v};
      }
      std::vector<int> order(n_);
      for (int v = 0; v < n_; ++v) order[v] = v;
      std::sort(order.begin(), order.end(), [&](int a, int b) {
        return keyed[a].first < keyed[b].first;
      });
      std::vector<int> next(n_);
      int c = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && keyed[order[i]].first != keyed[order[i - 1]].first) ++c;
        next[order[i]] = c;
      }
      if (next == colors) return;
      colors = std::move(next);
    }
  }

  void search(std::vector<int> colors) {
    // find the first color class with more than one vertex
    int target = -1;
    for (int c = 0; c < n_ && target < 0; ++c) {
      int count = 0;
      for (int v = 0; v < n_; ++v)
        if (colors[v] == c) ++count;
      if (count > 1) target = c;
    }
    if (target < 0) {
      // discrete: colors are a permutation
      std::vector<int> pos(n_);
      for (int v = 0; v < n_; ++v) pos[colors[v]] = v;
      std::uint64_t key = 0;
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
          if ((out_[pos[i]] >> pos[j]) & 1u)
            key |= (std::uint64_t{1} << (i * n_ + j));
      if (!best_set_ || key < best_) {
        best_ = key;
        best_set_ = true;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      std::vector<int> next = colors;
      for (int w = 0; w < n_; ++w)
        if (next[w] >= target && w != v) next[w]++;
      refine(next);
      search(std::move(next));
    }
  }

  int n_;
  std::vector<std::uint32_t> out_, in_;
  std::uint64_t best_ = 0;
  bool best_set_ = false;
};

}  // namespace detail

inline std::uint64_t canonical_key(const SimpleGraph& g) {
  std::vector<std::uint32_t> rows(g.size());
  for (int v = 0; v < g.size(); ++v) rows[v] = g.neighbors(v);
  return detail::RelationCanonicalizer(g.size(), rows).canonical_key();
}

inline std::uint64_t canonical_key(const Poset& p) {
  std::vector<std::uint32_t> rows(p.size());
  for (int v = 0; v < p.size(); ++v) rows[v] = p.strictly_above(v);
  return detail::RelationCanonicalizer(p.size(), rows).canonical_key();
}

}  // namespace toriclass
