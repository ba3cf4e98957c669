// Static orthogonal-range structures: point extremes/counting over rank space,
// and minimum-weight rectangle-enclosure queries via 4D dominance.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include "cover3/geometry.hpp"
#include "cover3/rational.hpp"

namespace cover3 {

constexpr int kNoRank = -1;

// Sorted unique coordinate values of one axis; all interior comparisons use ranks.
struct RankAxis {
  std::vector<Rational> vals;

  void build(std::vector<Rational> raw) {
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    vals = std::move(raw);
  }

  int size() const { return static_cast<int>(vals.size()); }

  int rank_of(const Rational& v) const {
    auto it = std::lower_bound(vals.begin(), vals.end(), v);
    return static_cast<int>(it - vals.begin());
  }

  // First rank whose value satisfies the lower bound (v >= s closed, v > s open).
  int lo_rank(const ExtScalar& s, bool closed) const {
    if (s.is_neg_inf()) return 0;
    if (s.is_pos_inf()) return size();
    auto it = closed ? std::lower_bound(vals.begin(), vals.end(), s.value())
                     : std::upper_bound(vals.begin(), vals.end(), s.value());
    return static_cast<int>(it - vals.begin());
  }

  // One past the last rank satisfying the upper bound (v <= s closed, v < s open).
  int hi_rank_excl(const ExtScalar& s, bool closed) const {
    if (s.is_neg_inf()) return 0;
    if (s.is_pos_inf()) return size();
    auto it = closed ? std::upper_bound(vals.begin(), vals.end(), s.value())
                     : std::lower_bound(vals.begin(), vals.end(), s.value());
    return static_cast<int>(it - vals.begin());
  }
};

// Half-open rank-space box.
struct RankBox {
  int x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  bool empty() const { return x0 >= x1 || y0 >= y1; }

  std::optional<RankBox> intersect(const RankBox& o) const {
    RankBox r{std::max(x0, o.x0), std::min(x1, o.x1), std::max(y0, o.y0), std::min(y1, o.y1)};
    if (r.empty()) return std::nullopt;
    return r;
  }
};

// Appends this \ cut as at most four disjoint boxes.
inline void rank_box_subtract(const RankBox& box, const RankBox& cut, std::vector<RankBox>& out) {
  auto inter = box.intersect(cut);
  if (!inter) {
    if (!box.empty()) out.push_back(box);
    return;
  }
  if (box.x0 < inter->x0) out.push_back({box.x0, inter->x0, box.y0, box.y1});
  if (inter->x1 < box.x1) out.push_back({inter->x1, box.x1, box.y0, box.y1});
  if (box.y0 < inter->y0) out.push_back({inter->x0, inter->x1, box.y0, inter->y0});
  if (inter->y1 < box.y1) out.push_back({inter->x0, inter->x1, inter->y1, box.y1});
}

inline std::vector<RankBox> rank_boxes_subtract(std::vector<RankBox> pieces, const RankBox& cut) {
  std::vector<RankBox> out;
  out.reserve(pieces.size() + 3);
  for (const auto& p : pieces) rank_box_subtract(p, cut, out);
  return out;
}

struct RankExtremes {
  int xmin, xmax, ymin, ymax;  // coordinate ranks
};

// Immutable merge-sort tree over n planar points; answers match a linear scan.
class PointIndex {
 public:
  PointIndex() = default;

  explicit PointIndex(const std::vector<PointD>& pts) {
    std::vector<Rational> xs, ys;
    xs.reserve(pts.size());
    ys.reserve(pts.size());
    for (const auto& p : pts) {
      if (p.dim() != 2) throw Error(Error::Code::DimensionMismatch, "PointIndex expects 2D points");
      xs.push_back(p[0]);
      ys.push_back(p[1]);
    }
    xaxis_.build(xs);
    yaxis_.build(ys);
    std::vector<std::pair<int, int>> rp;
    rp.reserve(pts.size());
    for (const auto& p : pts) rp.emplace_back(xaxis_.rank_of(p[0]), yaxis_.rank_of(p[1]));
    std::sort(rp.begin(), rp.end());
    n_ = static_cast<int>(rp.size());
    xr_.resize(n_);
    yr_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      xr_[i] = rp[i].first;
      yr_[i] = rp[i].second;
    }
    pos_of_xrank_.assign(xaxis_.size() + 1, n_);
    for (int i = n_ - 1; i >= 0; --i) pos_of_xrank_[xr_[i]] = i;
    for (int r = xaxis_.size() - 1; r >= 0; --r)
      pos_of_xrank_[r] = std::min(pos_of_xrank_[r], pos_of_xrank_[r + 1]);
    build_tree();
  }

  int size() const { return n_; }
  const RankAxis& xaxis() const { return xaxis_; }
  const RankAxis& yaxis() const { return yaxis_; }

  int pos_lo(int xrank) const {
    if (xrank <= 0) return 0;
    if (xrank >= xaxis_.size()) return n_;
    return pos_of_xrank_[xrank];
  }

  RankBox to_rank_box(const ExtRect& r) const {
    if (r.dim() != 2) throw Error(Error::Code::DimensionMismatch, "to_rank_box expects 2D");
    RankBox b;
    b.x0 = xaxis_.lo_rank(r.sides[0].lo, r.sides[0].lo_closed);
    b.x1 = xaxis_.hi_rank_excl(r.sides[0].hi, r.sides[0].hi_closed);
    b.y0 = yaxis_.lo_rank(r.sides[1].lo, r.sides[1].lo_closed);
    b.y1 = yaxis_.hi_rank_excl(r.sides[1].hi, r.sides[1].hi_closed);
    return b;
  }

  long long count(const RankBox& b) const {
    if (n_ == 0 || b.empty()) return 0;
    return count_rec(1, 0, size_, pos_lo(b.x0), pos_lo(b.x1), b.y0, b.y1);
  }

  bool any(const RankBox& b) const { return count(b) > 0; }  // TODO: early-exit descent

  // Extremes (as coordinate ranks) of the points inside b, or nullopt.
  std::optional<RankExtremes> extremes(const RankBox& b) const {
    if (n_ == 0 || b.empty()) return std::nullopt;
    int p0 = pos_lo(b.x0), p1 = pos_lo(b.x1);
    if (p0 >= p1) return std::nullopt;
    int ymin = ymin_rec(1, 0, size_, p0, p1, b.y0, b.y1);
    if (ymin == std::numeric_limits<int>::max()) return std::nullopt;
    int ymax = ymax_rec(1, 0, size_, p0, p1, b.y0, b.y1);
    int pmin = xmin_rec(1, 0, size_, p0, p1, b.y0, b.y1);
    int pmax = xmax_rec(1, 0, size_, p0, p1, b.y0, b.y1);
    return RankExtremes{xr_[pmin], xr_[pmax], ymin, ymax};
  }

  std::optional<Box2> extremes_box(const RankBox& b) const {
    auto e = extremes(b);
    if (!e) return std::nullopt;
    return Box2{xaxis_.vals[e->xmin], xaxis_.vals[e->xmax], yaxis_.vals[e->ymin], yaxis_.vals[e->ymax]};
  }

 private:
  void build_tree() {
    size_ = 1;
    while (size_ < std::max(n_, 1)) size_ <<= 1;
    std::vector<int> lens(2 * size_, 0);
    for (int i = 0; i < n_; ++i) lens[size_ + i] = 1;
    for (int v = size_ - 1; v >= 1; --v) lens[v] = lens[2 * v] + lens[2 * v + 1];
    // Heap order layout: node v data at [off[v], off[v]+len[v]).
    std::vector<int> off(2 * size_, 0);
    long long total = 0;
    for (int v = 1; v < 2 * size_; ++v) {
      off[v] = static_cast<int>(total);
      total += lens[v];
    }
    ydata_.assign(static_cast<std::size_t>(total), 0);
    node_off_ = std::move(off);
    node_len_ = std::move(lens);
    for (int i = 0; i < n_; ++i) ydata_[node_off_[size_ + i]] = yr_[i];
    for (int v = size_ - 1; v >= 1; --v) {
      auto* dst = ydata_.data() + node_off_[v];
      const auto* a = ydata_.data() + node_off_[2 * v];
      const auto* b = ydata_.data() + node_off_[2 * v + 1];
      std::merge(a, a + node_len_[2 * v], b, b + node_len_[2 * v + 1], dst);
    }
  }

  std::pair<const int*, const int*> node_span(int v) const {
    const int* base = ydata_.data() + node_off_[v];
    return {base, base + node_len_[v]};
  }

  long long count_rec(int v, int lo, int hi, int p0, int p1, int y0, int y1) const {
    if (p0 >= hi || p1 <= lo || node_len_[v] == 0) return 0;
    if (p0 <= lo && hi <= p1) {
      auto [b, e] = node_span(v);
      return std::lower_bound(b, e, y1) - std::lower_bound(b, e, y0);
    }
    int mid = (lo + hi) / 2;
    return count_rec(2 * v, lo, mid, p0, p1, y0, y1) + count_rec(2 * v + 1, mid, hi, p0, p1, y0, y1);
  }

  int ymin_rec(int v, int lo, int hi, int p0, int p1, int y0, int y1) const {
    if (p0 >= hi || p1 <= lo || node_len_[v] == 0) return std::numeric_limits<int>::max();
    if (p0 <= lo && hi <= p1) {
      auto [b, e] = node_span(v);
      auto it = std::lower_bound(b, e, y0);
      return (it != e && *it < y1) ? *it : std::numeric_limits<int>::max();
    }
    int mid = (lo + hi) / 2;
    return std::min(ymin_rec(2 * v, lo, mid, p0, p1, y0, y1), ymin_rec(2 * v + 1, mid, hi, p0, p1, y0, y1));
  }

  int ymax_rec(int v, int lo, int hi, int p0, int p1, int y0, int y1) const {
    if (p0 >= hi || p1 <= lo || node_len_[v] == 0) return std::numeric_limits<int>::min();
    if (p0 <= lo && hi <= p1) {
      auto [b, e] = node_span(v);
      auto it = std::lower_bound(b, e, y1);
      return (it != b && *(it - 1) >= y0) ? *(it - 1) : std::numeric_limits<int>::min();
    }
    int mid = (lo + hi) / 2;
    return std::max(ymax_rec(2 * v, lo, mid, p0, p1, y0, y1), ymax_rec(2 * v + 1, mid, hi, p0, p1, y0, y1));
  }

  bool node_has(int v, int y0, int y1) const {
    auto [b, e] = node_span(v);
    auto it = std::lower_bound(b, e, y0);
    return it != e && *it < y1;
  }

  int xmin_rec(int v, int lo, int hi, int p0, int p1, int y0, int y1) const {
    if (p0 >= hi || p1 <= lo || node_len_[v] == 0 || !node_has(v, y0, y1)) return -1;
    if (hi - lo == 1) return lo;
    int mid = (lo + hi) / 2;
    int r = xmin_rec(2 * v, lo, mid, p0, p1, y0, y1);
    if (r >= 0) return r;
    return xmin_rec(2 * v + 1, mid, hi, p0, p1, y0, y1);
  }

  int xmax_rec(int v, int lo, int hi, int p0, int p1, int y0, int y1) const {
    if (p0 >= hi || p1 <= lo || node_len_[v] == 0 || !node_has(v, y0, y1)) return -1;
    if (hi - lo == 1) return lo;
    int mid = (lo + hi) / 2;
    int r = xmax_rec(2 * v + 1, mid, hi, p0, p1, y0, y1);
    if (r >= 0) return r;
    return xmax_rec(2 * v, lo, mid, p0, p1, y0, y1);
  }

  int n_ = 0;
  int size_ = 1;
  RankAxis xaxis_, yaxis_;
  std::vector<int> xr_, yr_;
  std::vector<int> pos_of_xrank_;
  std::vector<int> node_off_, node_len_;
  std::vector<int> ydata_;
};

inline PointIndex build_point_index(const std::vector<PointD>& pts) { return PointIndex(pts); }

inline long long count_in_rect(const PointIndex& idx, const ExtRect& r) {
  return idx.count(idx.to_rank_box(r));
}

// Min/max x and y over points inside the union of ranges; absent if none.
inline std::optional<Box2> extremes_in_ranges(const PointIndex& idx, const std::vector<ExtRect>& ranges) {
  if (ranges.size() > 25)
    throw Error(Error::Code::InvalidArgument, "extremes_in_ranges: more than 25 ranges");
  std::optional<Box2> acc;
  for (const auto& r : ranges) {
    auto b = idx.extremes_box(idx.to_rank_box(r));
    if (!b) continue;
    if (!acc)
      acc = *b;
    else
      acc->merge(*b);
  }
  return acc;
}

struct EnclosureHit {
  int id;
  Rational weight;
};

// Composite side key: open low sides behave like value+eps, open high sides like
// value-eps, so enclosure tests reduce to integer position comparisons.
namespace detail {

struct SideKey {
  ExtScalar v;
  int bias;  // lo sides: closed 0, open 1.  hi sides: open 0, closed 1.

  friend bool operator<(const SideKey& a, const SideKey& b) {
    auto c = a.v <=> b.v;
    if (c != 0) return c < 0;
    return a.bias < b.bias;
  }
};

inline int prefix_len(const std::vector<SideKey>& sorted, const SideKey& q) {
  // number of keys <= q
  return static_cast<int>(std::upper_bound(sorted.begin(), sorted.end(), q) - sorted.begin());
}
inline int suffix_start(const std::vector<SideKey>& sorted, const SideKey& q) {
  // first index with key >= q
  return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), q) - sorted.begin());
}

}  // namespace detail

// Query thresholds in enclosure key space. An entry matches iff
//   xlo_pos < xlo_prefix && xhi_pos >= xhi_start && ylo_pos < ylo_prefix && yhi_pos >= yhi_start.
struct EnclosureQuery {
  int xlo_prefix, xhi_start, ylo_prefix, yhi_start;
};

// Minimum-weight rectangle enclosing a query box, over n weighted 2D rectangles
// (sides may be infinite or open). Keys live in R^4 dominance space; the
// structure is a segment tree over the x-lo order with weight-ordered scan
// lists and pruning aggregates per node.
class GeneralEnclosureIndex {
 public:
  GeneralEnclosureIndex() = default;

  explicit GeneralEnclosureIndex(const std::vector<ExtRect>& rects) {
    n_ = static_cast<int>(rects.size());
    ids_.resize(n_);
    weights_.resize(n_);
    std::vector<detail::SideKey> xlo(n_), xhi(n_), ylo(n_), yhi(n_);
    for (int i = 0; i < n_; ++i) {
      const auto& r = rects[i];
      if (r.dim() != 2) throw Error(Error::Code::DimensionMismatch, "EnclosureIndex expects 2D");
      ids_[i] = r.id >= 0 ? r.id : i;
      weights_[i] = r.weight.value_or(Rational(1));
      xlo[i] = {r.sides[0].lo, r.sides[0].lo_closed ? 0 : 1};
      xhi[i] = {r.sides[0].hi, r.sides[0].hi_closed ? 1 : 0};
      ylo[i] = {r.sides[1].lo, r.sides[1].lo_closed ? 0 : 1};
      yhi[i] = {r.sides[1].hi, r.sides[1].hi_closed ? 1 : 0};
    }
    // weight ranks: strict total order by (weight, id)
    std::vector<int> worder(n_);
    std::iota(worder.begin(), worder.end(), 0);
    std::sort(worder.begin(), worder.end(), [&](int a, int b) {
      auto c = weights_[a] <=> weights_[b];
      if (c != 0) return c < 0;
      return ids_[a] < ids_[b];
    });
    wrank_.resize(n_);
    by_wrank_.resize(n_);
    for (int r = 0; r < n_; ++r) {
      wrank_[worder[r]] = r;
      by_wrank_[r] = worder[r];
    }
    xlo_sorted_ = sort_keys(xlo, xlo_pos_);
    xhi_sorted_ = sort_keys(xhi, xhi_pos_);
    ylo_sorted_ = sort_keys(ylo, ylo_pos_);
    yhi_sorted_ = sort_keys(yhi, yhi_pos_);
    // order entries by xlo position for the prefix segment tree
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::sort(order_.begin(), order_.end(), [&](int a, int b) { return xlo_pos_[a] < xlo_pos_[b]; });
    build_tree();
  }

  int size() const { return n_; }
  bool empty() const { return n_ == 0; }

  std::optional<EnclosureHit> global_min() const {
    if (n_ == 0) return std::nullopt;
    int e = by_wrank_[0];
    return EnclosureHit{ids_[e], weights_[e]};
  }

  EnclosureQuery make_query(const Box2& b) const {
    return make_query_keys({ExtScalar(b.xlo), 0}, {ExtScalar(b.xhi), 1}, {ExtScalar(b.ylo), 0},
                           {ExtScalar(b.yhi), 1});
  }

  // Thresholds from explicit keys; used by the maximal filter for strict sides
  // (a strict low side passes bias -1 semantics via prefix on (v, -1)).
  EnclosureQuery make_query_keys(const detail::SideKey& qxlo, const detail::SideKey& qxhi,
                                 const detail::SideKey& qylo, const detail::SideKey& qyhi) const {
    EnclosureQuery q;
    q.xlo_prefix = detail::prefix_len(xlo_sorted_, qxlo);
    q.xhi_start = detail::suffix_start(xhi_sorted_, qxhi);
    q.ylo_prefix = detail::prefix_len(ylo_sorted_, qylo);
    q.yhi_start = detail::suffix_start(yhi_sorted_, qyhi);
    return q;
  }

  std::optional<EnclosureHit> query(const EnclosureQuery& q, int exclude_id = -1) const {
    int best = query_entry(q, exclude_id);
    if (best < 0) return std::nullopt;
    return EnclosureHit{ids_[best], weights_[best]};
  }

  // Entry index (not id) of the min-weight matching rectangle, or -1.
  // Query state lives on the stack so concurrent queries are safe.
  int query_entry(const EnclosureQuery& q, int exclude_id = -1) const {
    if (n_ == 0 || q.xlo_prefix <= 0) return -1;
    QueryState st{std::numeric_limits<int>::max(), -1, exclude_id};
    query_rec(1, 0, size_, q, st);
    return st.best_entry;
  }

  const Rational& weight_of_entry(int e) const { return weights_[e]; }
  int id_of_entry(int e) const { return ids_[e]; }

 private:
  std::vector<detail::SideKey> sort_keys(const std::vector<detail::SideKey>& keys, std::vector<int>& pos) {
    std::vector<int> idx(n_);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    std::vector<detail::SideKey> sorted(n_);
    pos.resize(n_);
    for (int r = 0; r < n_; ++r) {
      sorted[r] = keys[idx[r]];
      pos[idx[r]] = r;
    }
    return sorted;
  }

  void build_tree() {
    size_ = 1;
    while (size_ < std::max(n_, 1)) size_ <<= 1;
    node_entries_.assign(2 * size_, {});
    node_max_xhi_.assign(2 * size_, -1);
    node_min_ylo_.assign(2 * size_, std::numeric_limits<int>::max());
    node_max_yhi_.assign(2 * size_, -1);
    for (int i = 0; i < n_; ++i) node_entries_[size_ + i] = {order_[i]};
    for (int v = size_ - 1; v >= 1; --v) {
      auto& dst = node_entries_[v];
      dst = node_entries_[2 * v];
      dst.insert(dst.end(), node_entries_[2 * v + 1].begin(), node_entries_[2 * v + 1].end());
    }
    for (int v = 1; v < 2 * size_; ++v) {
      auto& es = node_entries_[v];
      std::sort(es.begin(), es.end(), [&](int a, int b) { return wrank_[a] < wrank_[b]; });
      for (int e : es) {
        node_max_xhi_[v] = std::max(node_max_xhi_[v], xhi_pos_[e]);
        node_min_ylo_[v] = std::min(node_min_ylo_[v], ylo_pos_[e]);
        node_max_yhi_[v] = std::max(node_max_yhi_[v], yhi_pos_[e]);
      }
    }
  }

  struct QueryState {
    int best_rank;
    int best_entry;
    int exclude;
  };

  void query_rec(int v, int lo, int hi, const EnclosureQuery& q, QueryState& st) const {
    if (lo >= q.xlo_prefix || node_entries_[v].empty()) return;
    if (node_max_xhi_[v] < q.xhi_start || node_min_ylo_[v] >= q.ylo_prefix ||
        node_max_yhi_[v] < q.yhi_start)
      return;
    if (hi <= q.xlo_prefix) {
      for (int e : node_entries_[v]) {
        if (wrank_[e] >= st.best_rank) break;
        if (xhi_pos_[e] >= q.xhi_start && ylo_pos_[e] < q.ylo_prefix && yhi_pos_[e] >= q.yhi_start &&
            ids_[e] != st.exclude) {
          st.best_rank = wrank_[e];
          st.best_entry = e;
          break;
        }
      }
      return;
    }
    int mid = (lo + hi) / 2;
    query_rec(2 * v, lo, mid, q, st);
    query_rec(2 * v + 1, mid, hi, q, st);
  }

  int n_ = 0;
  int size_ = 1;
  std::vector<int> ids_;
  std::vector<Rational> weights_;
  std::vector<int> wrank_, by_wrank_, order_;
  std::vector<int> xlo_pos_, xhi_pos_, ylo_pos_, yhi_pos_;
  std::vector<detail::SideKey> xlo_sorted_, xhi_sorted_, ylo_sorted_, yhi_sorted_;
  std::vector<std::vector<int>> node_entries_;
  std::vector<int> node_max_xhi_, node_min_ylo_, node_max_yhi_;
};

// Specialization for exact unit squares: enclosure reduces to a 2D range-min
// over the square corners, answered by a merge-sort tree with sparse-table RMQ.
class UnitEnclosureIndex {
 public:
  UnitEnclosureIndex() = default;

  // rects must be closed unit squares (side exactly 1).
  explicit UnitEnclosureIndex(const std::vector<ExtRect>& rects) {
    n_ = static_cast<int>(rects.size());
    ids_.resize(n_);
    weights_.resize(n_);
    std::vector<Rational> xs(n_), ys(n_);
    for (int i = 0; i < n_; ++i) {
      const auto& r = rects[i];
      ids_[i] = r.id >= 0 ? r.id : i;
      weights_[i] = r.weight.value_or(Rational(1));
      xs[i] = r.sides[0].lo.value();
      ys[i] = r.sides[1].lo.value();
    }
    xaxis_.build(xs);
    yaxis_.build(ys);
    std::vector<int> idx(n_);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> xr(n_), yr(n_);
    for (int i = 0; i < n_; ++i) {
      xr[i] = xaxis_.rank_of(xs[i]);
      yr[i] = yaxis_.rank_of(ys[i]);
    }
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      if (xr[a] != xr[b]) return xr[a] < xr[b];
      return yr[a] < yr[b];
    });
    entry_of_pos_ = idx;
    pos_of_xrank_.assign(xaxis_.size() + 1, n_);
    xr_sorted_.resize(n_);
    yr_sorted_.resize(n_);
    for (int p = 0; p < n_; ++p) {
      xr_sorted_[p] = xr[idx[p]];
      yr_sorted_[p] = yr[idx[p]];
    }
    for (int p = n_ - 1; p >= 0; --p) pos_of_xrank_[xr_sorted_[p]] = p;
    for (int r = xaxis_.size() - 1; r >= 0; --r)
      pos_of_xrank_[r] = std::min(pos_of_xrank_[r], pos_of_xrank_[r + 1]);
    std::vector<int> worder(n_);
    std::iota(worder.begin(), worder.end(), 0);
    std::sort(worder.begin(), worder.end(), [&](int a, int b) {
      auto c = weights_[a] <=> weights_[b];
      if (c != 0) return c < 0;
      return ids_[a] < ids_[b];
    });
    wrank_.resize(n_);
    by_wrank_.resize(n_);
    for (int r = 0; r < n_; ++r) {
      wrank_[worder[r]] = r;
      by_wrank_[r] = worder[r];
    }
    build_tree();
  }

  int size() const { return n_; }
  const RankAxis& xaxis() const { return xaxis_; }
  const RankAxis& yaxis() const { return yaxis_; }

  std::optional<EnclosureHit> global_min() const {
    if (n_ == 0) return std::nullopt;
    int e = by_wrank_[0];
    return EnclosureHit{ids_[e], weights_[e]};
  }

  // Min-weight square with corner x in x-rank range [rx0, rx1) and corner y in [ry0, ry1).
  int query_entry_ranks(int rx0, int rx1, int ry0, int ry1, int exclude_id = -1) const {
    if (n_ == 0) return -1;
    int p0 = pos_lo(rx0), p1 = pos_lo(rx1);
    if (p0 >= p1 || ry0 >= ry1) return -1;
    QueryState st{std::numeric_limits<int>::max(), -1, exclude_id};
    query_rec(1, 0, size_, p0, p1, ry0, ry1, st);
    return st.best_entry;
  }

  std::optional<EnclosureHit> query_box(const Box2& b, int exclude_id = -1) const {
    if (n_ == 0) return std::nullopt;
    // corner in [b.xhi - 1, b.xlo] x [b.yhi - 1, b.ylo]
    Rational one(1);
    int rx0 = xaxis_.lo_rank(ExtScalar(b.xhi - one), true);
    int rx1 = xaxis_.hi_rank_excl(ExtScalar(b.xlo), true);
    int ry0 = yaxis_.lo_rank(ExtScalar(b.yhi - one), true);
    int ry1 = yaxis_.hi_rank_excl(ExtScalar(b.ylo), true);
    int e = query_entry_ranks(rx0, rx1, ry0, ry1, exclude_id);
    if (e < 0) return std::nullopt;
    return EnclosureHit{ids_[e], weights_[e]};
  }

  const Rational& weight_of_entry(int e) const { return weights_[e]; }
  int id_of_entry(int e) const { return ids_[e]; }

 private:
  int pos_lo(int xrank) const {
    if (xrank <= 0) return 0;
    if (xrank >= xaxis_.size()) return n_;
    return pos_of_xrank_[xrank];
  }

  void build_tree() {
    size_ = 1;
    while (size_ < std::max(n_, 1)) size_ <<= 1;
    node_y_.assign(2 * size_, {});
    node_entry_.assign(2 * size_, {});
    node_rmq_.assign(2 * size_, {});
    for (int p = 0; p < n_; ++p) {
      node_y_[size_ + p] = {yr_sorted_[p]};
      node_entry_[size_ + p] = {entry_of_pos_[p]};
    }
    for (int v = size_ - 1; v >= 1; --v) {
      const auto& ly = node_y_[2 * v];
      const auto& ry = node_y_[2 * v + 1];
      const auto& le = node_entry_[2 * v];
      const auto& re = node_entry_[2 * v + 1];
      auto& dy = node_y_[v];
      auto& de = node_entry_[v];
      dy.resize(ly.size() + ry.size());
      de.resize(dy.size());
      std::size_t i = 0, j = 0, k = 0;
      while (i < ly.size() || j < ry.size()) {
        bool takeLeft = j >= ry.size() || (i < ly.size() && ly[i] <= ry[j]);
        if (takeLeft) {
          dy[k] = ly[i];
          de[k++] = le[i++];
        } else {
          dy[k] = ry[j];
          de[k++] = re[j++];
        }
      }
    }
    for (int v = 1; v < 2 * size_; ++v) {
      const auto& es = node_entry_[v];
      int m = static_cast<int>(es.size());
      if (m == 0) continue;
      int levels = 1;
      while ((1 << levels) <= m) ++levels;
      auto& table = node_rmq_[v];
      table.assign(static_cast<std::size_t>(levels) * m, 0);
      for (int i = 0; i < m; ++i) table[i] = es[i];
      for (int l = 1; l < levels; ++l) {
        int span = 1 << l;
        for (int i = 0; i + span <= m; ++i) {
          int a = table[(l - 1) * m + i];
          int b = table[(l - 1) * m + i + span / 2];
          table[l * m + i] = wrank_[a] <= wrank_[b] ? a : b;
        }
      }
    }
  }

  int rmq(int v, int lo, int hi) const {  // [lo, hi) in node order, nonempty
    int m = static_cast<int>(node_entry_[v].size());
    int l = 0;
    while ((2 << l) <= hi - lo) ++l;
    const auto& table = node_rmq_[v];
    int a = table[static_cast<std::size_t>(l) * m + lo];
    int b = table[static_cast<std::size_t>(l) * m + hi - (1 << l)];
    return wrank_[a] <= wrank_[b] ? a : b;
  }

  struct QueryState {
    int best_rank;
    int best_entry;
    int exclude;
  };

  void query_rec(int v, int lo, int hi, int p0, int p1, int y0, int y1, QueryState& st) const {
    if (p0 >= hi || p1 <= lo || node_y_[v].empty()) return;
    if (p0 <= lo && hi <= p1) {
      const auto& ys = node_y_[v];
      int a = static_cast<int>(std::lower_bound(ys.begin(), ys.end(), y0) - ys.begin());
      int b = static_cast<int>(std::lower_bound(ys.begin(), ys.end(), y1) - ys.begin());
      if (a >= b) return;
      if (st.exclude < 0) {
        int e = rmq(v, a, b);
        if (wrank_[e] < st.best_rank) {
          st.best_rank = wrank_[e];
          st.best_entry = e;
        }
      } else {
        // rare path: scan to skip one id
        for (int i = a; i < b; ++i) {
          int e = node_entry_[v][i];
          if (ids_[e] != st.exclude && wrank_[e] < st.best_rank) {
            st.best_rank = wrank_[e];
            st.best_entry = e;
          }
        }
      }
      return;
    }
    int mid = (lo + hi) / 2;
    query_rec(2 * v, lo, mid, p0, p1, y0, y1, st);
    query_rec(2 * v + 1, mid, hi, p0, p1, y0, y1, st);
  }

  int n_ = 0;
  int size_ = 1;
  RankAxis xaxis_, yaxis_;
  std::vector<int> ids_;
  std::vector<Rational> weights_;
  std::vector<int> wrank_, by_wrank_;
  std::vector<int> entry_of_pos_, xr_sorted_, yr_sorted_, pos_of_xrank_;
  std::vector<std::vector<int>> node_y_, node_entry_, node_rmq_;
};

inline bool is_unit_square(const ExtRect& r) {
  if (r.dim() != 2 || !r.all_sides_finite_closed()) return false;
  Rational one(1);
  return r.sides[0].hi.value() - r.sides[0].lo.value() == one &&
         r.sides[1].hi.value() - r.sides[1].lo.value() == one;
}

// Facade selecting the unit-square fast path when possible.
class EnclosureIndex {
 public:
  EnclosureIndex() = default;

  explicit EnclosureIndex(const std::vector<ExtRect>& rects, bool force_general = false) {
    unit_ = !force_general && !rects.empty() &&
            std::all_of(rects.begin(), rects.end(), is_unit_square);
    if (unit_)
      uidx_ = UnitEnclosureIndex(rects);
    else
      gidx_ = GeneralEnclosureIndex(rects);
    n_ = static_cast<int>(rects.size());
  }

  int size() const { return n_; }
  bool is_unit() const { return unit_; }
  const UnitEnclosureIndex& unit() const { return uidx_; }
  const GeneralEnclosureIndex& general() const { return gidx_; }

  std::optional<EnclosureHit> global_min() const {
    return unit_ ? uidx_.global_min() : gidx_.global_min();
  }

  std::optional<EnclosureHit> min_weight_enclosing(const Box2& b, int exclude_id = -1) const {
    if (n_ == 0) return std::nullopt;
    if (unit_) return uidx_.query_box(b, exclude_id);
    return gidx_.query(gidx_.make_query(b), exclude_id);
  }

  // Precomputes per-point-rank query thresholds so solver queries stay integer-only.
  void attach_point_axes(const RankAxis& xs, const RankAxis& ys) {
    int nx = xs.size(), ny = ys.size();
    if (unit_) {
      Rational one(1);
      ux0_.resize(nx);
      ux1_.resize(nx);
      uy0_.resize(ny);
      uy1_.resize(ny);
      for (int r = 0; r < nx; ++r) {
        ux0_[r] = uidx_.xaxis().lo_rank(ExtScalar(xs.vals[r] - one), true);
        ux1_[r] = uidx_.xaxis().hi_rank_excl(ExtScalar(xs.vals[r]), true);
      }
      for (int r = 0; r < ny; ++r) {
        uy0_[r] = uidx_.yaxis().lo_rank(ExtScalar(ys.vals[r] - one), true);
        uy1_[r] = uidx_.yaxis().hi_rank_excl(ExtScalar(ys.vals[r]), true);
      }
    } else {
      gq_xlo_.resize(nx);
      gq_xhi_.resize(nx);
      gq_ylo_.resize(ny);
      gq_yhi_.resize(ny);
      for (int r = 0; r < nx; ++r) {
        auto q = gidx_.make_query_keys({ExtScalar(xs.vals[r]), 0}, {ExtScalar(xs.vals[r]), 1},
                                       {ExtScalar::neg_inf(), 0}, {ExtScalar::neg_inf(), 0});
        gq_xlo_[r] = q.xlo_prefix;
        gq_xhi_[r] = q.xhi_start;
      }
      for (int r = 0; r < ny; ++r) {
        auto q = gidx_.make_query_keys({ExtScalar::neg_inf(), 0}, {ExtScalar::neg_inf(), 0},
                                       {ExtScalar(ys.vals[r]), 0}, {ExtScalar(ys.vals[r]), 1});
        gq_ylo_[r] = q.ylo_prefix;
        gq_yhi_[r] = q.yhi_start;
      }
    }
  }

  // Min-weight rectangle enclosing the closed box spanned by the given point
  // coordinate ranks (xmin..xmax, ymin..ymax). Requires attach_point_axes.
  std::optional<EnclosureHit> min_weight_enclosing_ranks(int rxmin, int rxmax, int rymin, int rymax,
                                                         int exclude_id = -1) const {
    if (n_ == 0) return std::nullopt;
    if (unit_) {
      int e = uidx_.query_entry_ranks(ux0_[rxmax], ux1_[rxmin], uy0_[rymax], uy1_[rymin], exclude_id);
      if (e < 0) return std::nullopt;
      return EnclosureHit{uidx_.id_of_entry(e), uidx_.weight_of_entry(e)};
    }
    EnclosureQuery q{gq_xlo_[rxmin], gq_xhi_[rxmax], gq_ylo_[rymin], gq_yhi_[rymax]};
    return gidx_.query(q, exclude_id);
  }

 private:
  int n_ = 0;
  bool unit_ = false;
  UnitEnclosureIndex uidx_;
  GeneralEnclosureIndex gidx_;
  std::vector<int> ux0_, ux1_, uy0_, uy1_;
  std::vector<int> gq_xlo_, gq_xhi_, gq_ylo_, gq_yhi_;
};

inline EnclosureIndex build_enclosure_index(const std::vector<ExtRect>& rects) {
  return EnclosureIndex(rects);
}

inline std::optional<EnclosureHit> min_weight_enclosing(const EnclosureIndex& idx, const Box2& b) {
  return idx.min_weight_enclosing(b);
}

}  // namespace cover3
