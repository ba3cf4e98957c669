// Given two rectangles, find the minimum-weight third rectangle completing a
// cover of P: bounding box of the uncovered remainder + one enclosure query.
#pragma once

#include <optional>
#include <vector>

#include "cover3/geometry.hpp"
#include "cover3/range_index.hpp"

namespace cover3 {

// B0 \ (r1 u r2) as disjoint side-exact pieces (at most 16; the spec allows 25).
inline std::vector<ExtRect> complement_decomposition(const ExtRect& r1, const ExtRect& r2,
                                                     const Box2& b0) {
  std::vector<ExtRect> pieces = subtract_rect_2d(b0.as_rect(), r1);
  std::vector<ExtRect> out;
  for (const auto& p : pieces) {
    auto rest = subtract_rect_2d(p, r2);
    out.insert(out.end(), rest.begin(), rest.end());
  }
  return out;
}

struct ThirdChoice {
  int id;
  Rational weight;
  bool remainder_empty;
};

// The pair-completion oracle over a fixed (P, R).
class PairOracle {
 public:
  PairOracle() = default;

  PairOracle(const std::vector<PointD>& points, const std::vector<ExtRect>& rects)
      : pidx_(points), eidx_(rects) {
    eidx_.attach_point_axes(pidx_.xaxis(), pidx_.yaxis());
    full_ = RankBox{0, pidx_.xaxis().size(), 0, pidx_.yaxis().size()};
    rect_boxes_.reserve(rects.size());
    for (const auto& r : rects) rect_boxes_.push_back(pidx_.to_rank_box(r));
    b0_ = bounding_box(points);
  }

  const PointIndex& point_index() const { return pidx_; }
  const EnclosureIndex& enclosure_index() const { return eidx_; }
  const std::optional<Box2>& b0() const { return b0_; }
  const RankBox& rect_box(int i) const { return rect_boxes_[i]; }
  const RankBox& full_box() const { return full_; }

  // Remainder pieces P \ (a u b) in rank space.
  std::vector<RankBox> remainder_pieces(const RankBox& a, const RankBox& b) const {
    std::vector<RankBox> pieces;
    if (!full_.empty()) pieces.push_back(full_);
    pieces = rank_boxes_subtract(std::move(pieces), a);
    pieces = rank_boxes_subtract(std::move(pieces), b);
    return pieces;
  }

  // Extremes of the uncovered remainder, as coordinate ranks.
  std::optional<RankExtremes> remainder_extremes(const RankBox& a, const RankBox& b) const {
    std::optional<RankExtremes> acc;
    for (const auto& piece : remainder_pieces(a, b)) {
      auto e = pidx_.extremes(piece);
      if (!e) continue;
      if (!acc) {
        acc = *e;
      } else {
        acc->xmin = std::min(acc->xmin, e->xmin);
        acc->xmax = std::max(acc->xmax, e->xmax);
        acc->ymin = std::min(acc->ymin, e->ymin);
        acc->ymax = std::max(acc->ymax, e->ymax);
      }
    }
    return acc;
  }

  // Min-weight r3 completing the cover for coverage boxes a, b. When the
  // remainder is empty, returns the global minimum-weight rectangle.
  std::optional<ThirdChoice> best_third_boxes(const RankBox& a, const RankBox& b) const {
    auto ext = remainder_extremes(a, b);
    if (!ext) {
      auto g = eidx_.global_min();
      if (!g) return std::nullopt;
      return ThirdChoice{g->id, g->weight, true};
    }
    auto hit = eidx_.min_weight_enclosing_ranks(ext->xmin, ext->xmax, ext->ymin, ext->ymax);
    if (!hit) return std::nullopt;
    return ThirdChoice{hit->id, hit->weight, false};
  }

  std::optional<ThirdChoice> best_third_ids(int i, int j) const {
    return best_third_boxes(rect_boxes_[i], rect_boxes_[j]);
  }

  std::optional<ThirdChoice> best_third(const ExtRect& r1, const ExtRect& r2) const {
    return best_third_boxes(pidx_.to_rank_box(r1), pidx_.to_rank_box(r2));
  }

  // Number of points left uncovered by up to three coverage boxes; early exit
  // once nonzero when `any_only` is set.
  long long uncovered_count(const RankBox& a, const RankBox& b, const RankBox& c,
                            bool any_only = false) const {
    std::vector<RankBox> pieces;
    if (!full_.empty()) pieces.push_back(full_);
    pieces = rank_boxes_subtract(std::move(pieces), a);
    pieces = rank_boxes_subtract(std::move(pieces), b);
    pieces = rank_boxes_subtract(std::move(pieces), c);
    long long total = 0;
    for (const auto& p : pieces) {
      total += pidx_.count(p);
      if (any_only && total > 0) return total;
    }
    return total;
  }

 private:
  PointIndex pidx_;
  EnclosureIndex eidx_;
  std::vector<RankBox> rect_boxes_;
  std::optional<Box2> b0_;
  RankBox full_;
};

}  // namespace cover3
