// Non-uniform grid over rectangle vertices, edge extension against the point
// bounding box, maximal-rectangle filtering, and grid-cell helpers.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "cover3/geometry.hpp"
#include "cover3/range_index.hpp"

namespace cover3 {

enum class Side : int { Left = 0, Right = 1, Bottom = 2, Top = 3 };

struct CellRef {
  int col = 0;
  int row = 0;
  friend bool operator==(const CellRef& a, const CellRef& b) { return a.col == b.col && a.row == b.row; }
};

// Replaces rectangle sides lying at or outside the bounding box of P by
// +-infinity; the covered subset of P is unchanged per rectangle.
inline std::vector<ExtRect> extend_rects(const std::vector<ExtRect>& rects, const Box2& b0) {
  std::vector<ExtRect> out;
  out.reserve(rects.size());
  auto extend_lo = [](Interval& s, const Rational& bound) {
    if (!s.lo.is_finite()) return;
    auto c = s.lo.value() <=> bound;
    if (c < 0 || (c == 0 && s.lo_closed)) {
      s.lo = ExtScalar::neg_inf();
      s.lo_closed = false;
    }
  };
  auto extend_hi = [](Interval& s, const Rational& bound) {
    if (!s.hi.is_finite()) return;
    auto c = s.hi.value() <=> bound;
    if (c > 0 || (c == 0 && s.hi_closed)) {
      s.hi = ExtScalar::pos_inf();
      s.hi_closed = false;
    }
  };
  for (ExtRect r : rects) {
    extend_lo(r.sides[0], b0.xlo);
    extend_hi(r.sides[0], b0.xhi);
    extend_lo(r.sides[1], b0.ylo);
    extend_hi(r.sides[1], b0.yhi);
    out.push_back(std::move(r));
  }
  return out;
}

// Per-rectangle bounded-edge column/row assignment (kNoRank when unbounded).
struct EdgeColumns {
  int left = kNoRank, right = kNoRank, bottom = kNoRank, top = kNoRank;
};

struct Grid {
  // Interior boundaries, strictly increasing. Column c covers [xb[c-1], xb[c])
  // with xb[-1] = -inf and xb[cols-1] = +inf; a coordinate on a boundary
  // belongs to the cell it bounds from below.
  std::vector<Rational> xb, yb;
  std::vector<EdgeColumns> edges;  // parallel to the rectangle list

  int cols() const { return static_cast<int>(xb.size()) + 1; }
  int rows() const { return static_cast<int>(yb.size()) + 1; }

  int col_of(const Rational& x) const {
    return static_cast<int>(std::upper_bound(xb.begin(), xb.end(), x) - xb.begin());
  }
  int row_of(const Rational& y) const {
    return static_cast<int>(std::upper_bound(yb.begin(), yb.end(), y) - yb.begin());
  }

  // Point-rank ranges per column/row against a point index axis.
  std::vector<int> column_ranks(const RankAxis& xs) const {
    std::vector<int> r(xb.size() + 2);
    r[0] = 0;
    for (std::size_t i = 0; i < xb.size(); ++i) r[i + 1] = xs.lo_rank(ExtScalar(xb[i]), true);
    r[xb.size() + 1] = xs.size();
    return r;
  }
  std::vector<int> row_ranks(const RankAxis& ys) const {
    std::vector<int> r(yb.size() + 2);
    r[0] = 0;
    for (std::size_t i = 0; i < yb.size(); ++i) r[i + 1] = ys.lo_rank(ExtScalar(yb[i]), true);
    r[yb.size() + 1] = ys.size();
    return r;
  }
};

namespace detail {

// Boundaries such that every open interval between consecutive boundaries
// contains at most `step` multiset elements.
inline std::vector<Rational> occupancy_boundaries(std::vector<Rational> coords, long long step) {
  std::sort(coords.begin(), coords.end());
  std::vector<Rational> bounds;
  long long run = 0;
  std::size_t i = 0;
  while (i < coords.size()) {
    std::size_t j = i;
    while (j < coords.size() && coords[j] == coords[i]) ++j;
    long long mult = static_cast<long long>(j - i);
    if (run + mult > step) {
      bounds.push_back(coords[i]);
      run = 0;
    } else {
      run += mult;
    }
    i = j;
  }
  return bounds;
}

}  // namespace detail

// g x g non-uniform grid: boundaries at every ceil(4n/g)-th rectangle vertex
// coordinate, with ties resolved so interiors always meet the occupancy bound.
inline Grid build_grid(const std::vector<ExtRect>& extended, int g) {
  if (g < 1) throw Error(Error::Code::InvalidArgument, "build_grid: g must be >= 1");
  long long n = static_cast<long long>(extended.size());
  long long step = (4 * std::max<long long>(n, 1) + g - 1) / g;
  std::vector<Rational> xs, ys;
  for (const auto& r : extended) {
    bool lx = r.sides[0].lo.is_finite(), hx = r.sides[0].hi.is_finite();
    bool ly = r.sides[1].lo.is_finite(), hy = r.sides[1].hi.is_finite();
    int vert_y = (ly ? 1 : 0) + (hy ? 1 : 0);
    int vert_x = (lx ? 1 : 0) + (hx ? 1 : 0);
    // each corner contributes one x and one y entry
    for (int k = 0; k < vert_y; ++k) {
      if (lx) xs.push_back(r.sides[0].lo.value());
      if (hx) xs.push_back(r.sides[0].hi.value());
    }
    for (int k = 0; k < vert_x; ++k) {
      if (ly) ys.push_back(r.sides[1].lo.value());
      if (hy) ys.push_back(r.sides[1].hi.value());
    }
  }
  Grid grid;
  grid.xb = detail::occupancy_boundaries(std::move(xs), step);
  grid.yb = detail::occupancy_boundaries(std::move(ys), step);
  grid.edges.reserve(extended.size());
  for (const auto& r : extended) {
    EdgeColumns e;
    if (r.sides[0].lo.is_finite()) e.left = grid.col_of(r.sides[0].lo.value());
    if (r.sides[0].hi.is_finite()) e.right = grid.col_of(r.sides[0].hi.value());
    if (r.sides[1].lo.is_finite()) e.bottom = grid.row_of(r.sides[1].lo.value());
    if (r.sides[1].hi.is_finite()) e.top = grid.row_of(r.sides[1].hi.value());
    grid.edges.push_back(e);
  }
  return grid;
}

namespace detail {

// a strictly contained in b, as point sets.
inline bool strictly_contained(const ExtRect& a, const ExtRect& b) {
  bool strict = false;
  for (std::size_t d = 0; d < a.dim(); ++d) {
    const Interval& ia = a.sides[d];
    const Interval& ib = b.sides[d];
    // lo side: ib must reach at least as low
    {
      detail::SideKey ka{ia.lo, ia.lo_closed ? 0 : 1};
      detail::SideKey kb{ib.lo, ib.lo_closed ? 0 : 1};
      if (ka < kb) return false;
      if (kb < ka) strict = true;
    }
    {
      detail::SideKey ka{ia.hi, ia.hi_closed ? 1 : 0};
      detail::SideKey kb{ib.hi, ib.hi_closed ? 1 : 0};
      if (kb < ka) return false;
      if (ka < kb) strict = true;
    }
  }
  return strict;
}

}  // namespace detail

// Indices of rectangles whose extended shape is not strictly contained in
// another extended shape. Containers of dropped rectangles always survive, so
// any optimal cover value is preserved. For unit squares only boundary-touching
// (partially unbounded) shapes can strictly contain, which keeps this pass
// near-linear on typical instances.
inline std::vector<int> maximal_filter_indices(const std::vector<ExtRect>& extended) {
  int n = static_cast<int>(extended.size());
  // All fully bounded dims share one span <=> shapes are translates there, so
  // only partially unbounded shapes can strictly contain anything.
  bool translates = true;
  std::size_t dims = extended.empty() ? 0 : extended[0].dim();
  for (std::size_t d = 0; d < dims && translates; ++d) {
    std::optional<Rational> span;
    for (const auto& r : extended) {
      const auto& s = r.sides[d];
      if (!s.lo.is_finite() || !s.hi.is_finite()) continue;
      Rational w = s.hi.value() - s.lo.value();
      if (!span)
        span = w;
      else if (*span != w) {
        translates = false;
        break;
      }
    }
  }
  std::vector<int> candidates;
  candidates.reserve(n);
  for (int i = 0; i < n; ++i) {
    const auto& r = extended[i];
    bool reduced = false;
    for (const auto& s : r.sides)
      if (!s.lo.is_finite() || !s.hi.is_finite()) reduced = true;
    if (reduced || !translates) candidates.push_back(i);
  }
  std::vector<int> keep;
  keep.reserve(n);
  for (int i = 0; i < n; ++i) {
    bool dominated = false;
    for (int j : candidates) {
      if (j == i) continue;
      if (detail::strictly_contained(extended[i], extended[j])) {
        dominated = true;
        break;
      }
    }
    if (!dominated) keep.push_back(i);
  }
  return keep;
}

inline std::vector<ExtRect> maximal_filter(const std::vector<ExtRect>& rects) {
  auto idx = maximal_filter_indices(rects);
  std::vector<ExtRect> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(rects[i]);
  return out;
}

// Number of points of S (set semantics) not strictly dominated within S.
inline long long count_maximal_grid_points(std::vector<std::vector<int>> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  long long cnt = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < s.size() && !dominated; ++j) {
      if (i == j) continue;
      bool all = true;
      for (std::size_t d = 0; d < s[i].size(); ++d) {
        if (s[j][d] <= s[i][d]) {
          all = false;
          break;
        }
      }
      dominated = all;
    }
    if (!dominated) ++cnt;
  }
  return cnt;
}

// Extreme grid cells along edge `side` of r1 that contain a point of P not
// covered by r1; scans the O(g) cells the edge intersects.
inline std::pair<std::optional<CellRef>, std::optional<CellRef>> gamma_cells(
    const ExtRect& r1, Side side, const Grid& grid, const PointIndex& pidx) {
  const Interval& sx = r1.sides[0];
  const Interval& sy = r1.sides[1];
  bool horizontal = side == Side::Bottom || side == Side::Top;
  const ExtScalar& coord = side == Side::Left     ? sx.lo
                           : side == Side::Right  ? sx.hi
                           : side == Side::Bottom ? sy.lo
                                                  : sy.hi;
  if (!coord.is_finite())
    throw Error(Error::Code::InvalidArgument, "gamma_cells: edge must be a bounded side");

  auto col_ranks = grid.column_ranks(pidx.xaxis());
  auto row_ranks = grid.row_ranks(pidx.yaxis());
  RankBox rbox = pidx.to_rank_box(r1);

  auto cell_box = [&](int c, int r) {
    return RankBox{col_ranks[c], col_ranks[c + 1], row_ranks[r], row_ranks[r + 1]};
  };
  auto has_uncovered = [&](int c, int r) {
    RankBox cb = cell_box(c, r);
    long long inside = pidx.count(cb);
    if (inside == 0) return false;
    auto overlap = cb.intersect(rbox);
    long long covered = overlap ? pidx.count(*overlap) : 0;
    return inside > covered;
  };

  std::optional<CellRef> lo_cell, hi_cell;
  if (horizontal) {
    int row = grid.row_of(coord.value());
    int c0 = sx.lo.is_finite() ? grid.col_of(sx.lo.value()) : 0;
    int c1 = sx.hi.is_finite() ? grid.col_of(sx.hi.value()) : grid.cols() - 1;
    for (int c = c0; c <= c1; ++c)
      if (has_uncovered(c, row)) {
        lo_cell = CellRef{c, row};
        break;
      }
    if (lo_cell)
      for (int c = c1; c >= c0; --c)
        if (has_uncovered(c, row)) {
          hi_cell = CellRef{c, row};
          break;
        }
  } else {
    int col = grid.col_of(coord.value());
    int r0 = sy.lo.is_finite() ? grid.row_of(sy.lo.value()) : 0;
    int r1i = sy.hi.is_finite() ? grid.row_of(sy.hi.value()) : grid.rows() - 1;
    for (int r = r0; r <= r1i; ++r)
      if (has_uncovered(col, r)) {
        lo_cell = CellRef{col, r};
        break;
      }
    if (lo_cell)
      for (int r = r1i; r >= r0; --r)
        if (has_uncovered(col, r)) {
          hi_cell = CellRef{col, r};
          break;
        }
  }
  return {lo_cell, hi_cell};
}

}  // namespace cover3
