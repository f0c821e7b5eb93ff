#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "toriclass/int_matrix.hpp"

namespace toriclass {

using Point = std::vector<Int>;

// origin + (integer span of basis rows); basis rows are linearly independent.
class AffineLatticeBasis {
 public:
  AffineLatticeBasis() = default;
  AffineLatticeBasis(Point origin, IntMatrix basis_rows)
      : origin_(std::move(origin)), basis_(std::move(basis_rows)) {
    solver_ = smith_normal_form(basis_, true);
  }

  const Point& origin() const { return origin_; }
  const IntMatrix& basis() const { return basis_; }
  std::size_t rank() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return origin_.size(); }

  // Index of the spanned lattice inside its saturation.
  Int lattice_index() const {
    Int idx = 1;
    for (const Int& d : solver_.invariant_factors) idx *= d;
    return idx;
  }

  // Coordinates x with origin + x * basis = p, if p lies in the lattice.
  std::optional<std::vector<Int>> coordinates(const Point& p) const {
    const std::size_t d = ambient_dim(), r = rank();
    std::vector<Int> w(d);
    for (std::size_t j = 0; j < d; ++j) w[j] = p[j] - origin_[j];
    // basis = U^-1 D V^-1, so x*basis = w  <=>  (x U^-1) D = w V
    const IntMatrix& vv = *solver_.right;
    std::vector<Int> wv(d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i) wv[j] += w[i] * vv(i, j);
    for (std::size_t j = r; j < d; ++j)
      if (wv[j] != 0) return std::nullopt;
    std::vector<Int> z(r);
    for (std::size_t j = 0; j < r; ++j) {
      const Int& dj = solver_.invariant_factors[j];
      if (wv[j] % dj != 0) return std::nullopt;
      z[j] = wv[j] / dj;
    }
    const IntMatrix& uu = *solver_.left;
    std::vector<Int> x(r);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t i = 0; i < r; ++i) x[j] += z[i] * uu(i, j);
    return x;
  }

  Point to_ambient(const std::vector<Int>& coords) const {
    Point p = origin_;
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < ambient_dim(); ++j)
        p[j] += coords[i] * basis_(i, j);
    return p;
  }

 private:
  Point origin_;
  IntMatrix basis_;
  SmithForm solver_;
};

namespace detail {
inline IntMatrix difference_rows(const std::vector<Point>& points) {
  const std::size_t d = points.front().size();
  IntMatrix diffs(points.size() - 1, d);
  for (std::size_t i = 1; i < points.size(); ++i)
    for (std::size_t j = 0; j < d; ++j)
      diffs(i - 1, j) = points[i][j] - points[0][j];
  return diffs;
}
}  // namespace detail

// Lattice generated by all pairwise differences of the points.
inline AffineLatticeBasis affine_lattice_span(const std::vector<Point>& points) {
  if (points.size() == 1)
    return AffineLatticeBasis(points.front(),
                              IntMatrix(0, points.front().size()));
  return AffineLatticeBasis(points.front(),
                            hermite_row_basis(detail::difference_rows(points)));
}

// Z^d intersected with the affine hull of the points (the saturation of the
// difference lattice); this is the lattice of the full-dimensional
// representative of a polytope on these points.
inline AffineLatticeBasis affine_lattice_saturation(
    const std::vector<Point>& points) {
  const std::size_t d = points.front().size();
  if (points.size() == 1)
    return AffineLatticeBasis(points.front(), IntMatrix(0, d));
  IntMatrix diffs = detail::difference_rows(points);
  IntMatrix normals = integer_kernel(diffs);
  IntMatrix sat = integer_kernel(normals);
  return AffineLatticeBasis(points.front(), hermite_row_basis(sat));
}

}  // namespace toriclass
