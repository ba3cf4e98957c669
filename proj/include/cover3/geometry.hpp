// Points, axis-aligned boxes with extended/open endpoints, coverage predicates.
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "cover3/rational.hpp"

namespace cover3 {

struct PointD {
  std::vector<Rational> coords;

  PointD() = default;
  explicit PointD(std::vector<Rational> c) : coords(std::move(c)) {}
  PointD(Rational x, Rational y) : coords{std::move(x), std::move(y)} {}

  std::size_t dim() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }

  friend bool operator==(const PointD& a, const PointD& b) { return a.coords == b.coords; }
};

// One side-aware interval of an ExtRect. An infinite endpoint is never attained,
// so its closed flag is irrelevant; we keep it false for canonical form.
struct Interval {
  ExtScalar lo = ExtScalar::neg_inf();
  ExtScalar hi = ExtScalar::pos_inf();
  bool lo_closed = false;
  bool hi_closed = false;

  Interval() = default;
  Interval(ExtScalar l, ExtScalar h, bool lc, bool hc)
      : lo(std::move(l)), hi(std::move(h)), lo_closed(lc && lo.is_finite()), hi_closed(hc && hi.is_finite()) {}

  static Interval closed(Rational l, Rational h) {
    return Interval(ExtScalar(std::move(l)), ExtScalar(std::move(h)), true, true);
  }
  static Interval all() { return Interval(); }

  bool contains(const Rational& v) const {
    if (lo.is_finite()) {
      auto c = v <=> lo.value();
      if (c < 0 || (c == 0 && !lo_closed)) return false;
    }
    if (hi.is_finite()) {
      auto c = v <=> hi.value();
      if (c > 0 || (c == 0 && !hi_closed)) return false;
    }
    return lo.is_neg_inf() || hi.is_pos_inf() || true;
  }

  // Nonempty iff lo < hi, or lo == hi finite with both ends closed.
  bool valid() const {
    auto c = lo <=> hi;
    if (c < 0) return true;
    if (c > 0) return false;
    return lo.is_finite() && lo_closed && hi_closed;
  }

  bool is_all() const { return lo.is_neg_inf() && hi.is_pos_inf(); }

  // Set intersection of two intervals; nullopt when empty.
  std::optional<Interval> intersect(const Interval& o) const {
    Interval r = *this;
    auto c = o.lo <=> r.lo;
    if (c > 0 || (c == 0 && !o.lo_closed)) {
      r.lo = o.lo;
      r.lo_closed = o.lo_closed;
    }
    c = o.hi <=> r.hi;
    if (c < 0 || (c == 0 && !o.hi_closed)) {
      r.hi = o.hi;
      r.hi_closed = o.hi_closed;
    }
    if (!r.valid()) return std::nullopt;
    return r;
  }

  // Set difference this \ o as at most two disjoint intervals (left part, right part).
  std::vector<Interval> subtract(const Interval& o) const {
    std::vector<Interval> out;
    auto inter = intersect(o);
    if (!inter) {
      out.push_back(*this);
      return out;
    }
    // Left residue: [this.lo, inter.lo) with complementary closedness at the cut.
    {
      Interval left(lo, inter->lo, lo_closed, !inter->lo_closed);
      if ((left.lo <=> left.hi) < 0 || (left.lo == left.hi && left.lo.is_finite() && left.lo_closed && left.hi_closed)) {
        if (left.valid()) out.push_back(left);
      }
    }
    {
      Interval right(inter->hi, hi, !inter->hi_closed, hi_closed);
      if (right.valid()) out.push_back(right);
    }
    return out;
  }

  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi && a.lo_closed == b.lo_closed && a.hi_closed == b.hi_closed;
  }
};

// Axis-aligned box in R^d with per-side extended endpoints and open/closed flags.
struct ExtRect {
  std::vector<Interval> sides;
  std::optional<Rational> weight;
  int id = -1;

  ExtRect() = default;
  explicit ExtRect(std::size_t d) : sides(d) {}
  ExtRect(std::vector<Interval> s, std::optional<Rational> w = std::nullopt, int rect_id = -1)
      : sides(std::move(s)), weight(std::move(w)), id(rect_id) {}

  static ExtRect closed_box(const std::vector<Rational>& lo, const std::vector<Rational>& hi,
                            std::optional<Rational> w = std::nullopt, int rect_id = -1) {
    if (lo.size() != hi.size()) throw Error(Error::Code::DimensionMismatch, "closed_box lo/hi dims differ");
    std::vector<Interval> s;
    s.reserve(lo.size());
    for (std::size_t i = 0; i < lo.size(); ++i) s.push_back(Interval::closed(lo[i], hi[i]));
    return ExtRect(std::move(s), std::move(w), rect_id);
  }

  static ExtRect whole_space(std::size_t d, std::optional<Rational> w = std::nullopt, int rect_id = -1) {
    return ExtRect(std::vector<Interval>(d), std::move(w), rect_id);
  }

  std::size_t dim() const { return sides.size(); }

  bool valid() const {
    for (const auto& s : sides)
      if (!s.valid()) return false;
    return true;
  }

  bool all_sides_finite_closed() const {
    for (const auto& s : sides) {
      if (!s.lo.is_finite() || !s.hi.is_finite() || !s.lo_closed || !s.hi_closed) return false;
    }
    return true;
  }

  bool contains(const PointD& p) const {
    if (p.dim() != dim()) throw Error(Error::Code::DimensionMismatch, "point/rect dimension mismatch");
    for (std::size_t i = 0; i < sides.size(); ++i)
      if (!sides[i].contains(p[i])) return false;
    return true;
  }
};

inline bool point_in_rect(const PointD& p, const ExtRect& r) { return r.contains(p); }

inline bool covers_all(const std::vector<ExtRect>& rects, const std::vector<PointD>& points) {
  for (const auto& r : rects) {
    if (!points.empty() && r.dim() != points.front().dim())
      throw Error(Error::Code::DimensionMismatch, "covers_all dimension mismatch");
  }
  for (const auto& p : points) {
    bool hit = false;
    for (const auto& r : rects) {
      if (r.contains(p)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

// outer >= inner as point sets. inner must have finite closed sides;
// an open outer side at value v does not enclose an inner closed side at v.
inline bool rect_encloses(const ExtRect& outer, const ExtRect& inner) {
  if (outer.dim() != inner.dim()) throw Error(Error::Code::DimensionMismatch, "enclosure dimension mismatch");
  for (std::size_t i = 0; i < outer.dim(); ++i) {
    const Interval& o = outer.sides[i];
    const Interval& in = inner.sides[i];
    if (!in.lo.is_finite() || !in.hi.is_finite() || !in.lo_closed || !in.hi_closed)
      throw Error(Error::Code::InvalidArgument, "rect_encloses: inner side must be finite and closed");
    if (o.lo.is_finite()) {
      auto c = o.lo <=> in.lo;
      if (c > 0 || (c == 0 && !o.lo_closed)) return false;
    }
    if (o.hi.is_finite()) {
      auto c = o.hi <=> in.hi;
      if (c < 0 || (c == 0 && !o.hi_closed)) return false;
    }
  }
  return true;
}

// Finite closed 2D bounding box.
struct Box2 {
  Rational xlo, xhi, ylo, yhi;

  ExtRect as_rect() const { return ExtRect::closed_box({xlo, ylo}, {xhi, yhi}); }

  void merge_point(const Rational& x, const Rational& y) {
    xlo = min(xlo, x);
    xhi = max(xhi, x);
    ylo = min(ylo, y);
    yhi = max(yhi, y);
  }
  void merge(const Box2& o) {
    xlo = min(xlo, o.xlo);
    xhi = max(xhi, o.xhi);
    ylo = min(ylo, o.ylo);
    yhi = max(yhi, o.yhi);
  }

  friend bool operator==(const Box2& a, const Box2& b) {
    return a.xlo == b.xlo && a.xhi == b.xhi && a.ylo == b.ylo && a.yhi == b.yhi;
  }
};

inline std::optional<Box2> bounding_box(const std::vector<PointD>& pts) {
  if (pts.empty()) return std::nullopt;
  Box2 b{pts[0][0], pts[0][0], pts[0][1], pts[0][1]};
  for (const auto& p : pts) b.merge_point(p[0], p[1]);
  return b;
}

// Squared Euclidean distance, exact.
inline Rational squared_distance(const PointD& a, const PointD& b) {
  if (a.dim() != b.dim()) throw Error(Error::Code::DimensionMismatch, "squared_distance dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Rational d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

// L-infinity distance, exact.
inline Rational linf_distance(const PointD& a, const PointD& b) {
  if (a.dim() != b.dim()) throw Error(Error::Code::DimensionMismatch, "linf_distance dimension mismatch");
  Rational m = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) m = max(m, (a[i] - b[i]).abs());
  return m;
}

// this \ r over 2D rects with exact open/closed bookkeeping; pieces are disjoint.
inline std::vector<ExtRect> subtract_rect_2d(const ExtRect& region, const ExtRect& r) {
  std::vector<ExtRect> out;
  if (region.dim() != 2 || r.dim() != 2)
    throw Error(Error::Code::DimensionMismatch, "subtract_rect_2d expects 2D");
  auto ix = region.sides[0].intersect(r.sides[0]);
  auto iy = region.sides[1].intersect(r.sides[1]);
  if (!ix || !iy) {
    out.push_back(region);
    return out;
  }
  // Left/right slabs over region's full y range, then top/bottom within the x overlap.
  for (const Interval& xs : region.sides[0].subtract(r.sides[0])) {
    out.push_back(ExtRect({xs, region.sides[1]}));
  }
  for (const Interval& ys : region.sides[1].subtract(r.sides[1])) {
    out.push_back(ExtRect({*ix, ys}));
  }
  return out;
}

}  // namespace cover3
