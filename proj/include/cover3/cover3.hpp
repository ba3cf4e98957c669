// Size-3 set cover solvers for points and axis-aligned rectangles in the
// plane: the grid-based baseline and its refinements for unweighted inputs,
// weighted rectangles, and (un)weighted unit squares.
#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <thread>
#include <tuple>
#include <vector>

#include "cover3/geometry.hpp"
#include "cover3/grid.hpp"
#include "cover3/oracles.hpp"
#include "cover3/pair_oracle.hpp"
#include "cover3/range_index.hpp"

namespace cover3 {

enum class Variant { Auto, Basic, Unweighted, WeightedRect, UnitWeighted, UnitUnweighted, Oracle };

enum class Provenance { Step1, Step2, Step3, CaseI, CaseII, CaseIII, UnitCaseII, UnitCaseIII, Oracle };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Step1: return "STEP1";
    case Provenance::Step2: return "STEP2";
    case Provenance::Step3: return "STEP3";
    case Provenance::CaseI: return "CASE_I";
    case Provenance::CaseII: return "CASE_II";
    case Provenance::CaseIII: return "CASE_III";
    case Provenance::UnitCaseII: return "UNIT_CASE_II";
    case Provenance::UnitCaseIII: return "UNIT_CASE_III";
    case Provenance::Oracle: return "ORACLE";
  }
  return "?";
}

inline const char* to_string(Variant v) {
  switch (v) {
    case Variant::Auto: return "auto";
    case Variant::Basic: return "basic";
    case Variant::Unweighted: return "unweighted";
    case Variant::WeightedRect: return "weighted_rect";
    case Variant::UnitWeighted: return "unit_weighted";
    case Variant::UnitUnweighted: return "unit_unweighted";
    case Variant::Oracle: return "oracle";
  }
  return "?";
}

struct Cover3Solution {
  std::array<int, 3> ids{};  // sorted ascending
  Rational weight;
  Provenance provenance = Provenance::Step1;
};

struct SolveStats {
  int n = 0, m = 0, g = 0;
  long long step1_pairs = 0;
  long long step2_pairs = 0;
  long long step3_configs = 0;
  long long case1_queries = 0;
  long long case2_configs = 0;
  long long case3_configs = 0;
  long long pair_queries = 0;
  long long triples_verified = 0;
  double wall_ms = 0.0;

  void merge(const SolveStats& o) {
    step1_pairs += o.step1_pairs;
    step2_pairs += o.step2_pairs;
    step3_configs += o.step3_configs;
    case1_queries += o.case1_queries;
    case2_configs += o.case2_configs;
    case3_configs += o.case3_configs;
    pair_queries += o.pair_queries;
    triples_verified += o.triples_verified;
  }
};

struct SolveOptions {
  Variant variant = Variant::Auto;
  std::optional<int> grid_size;
  int threads = 1;
};

// ceil(n^{num/den}) computed exactly.
inline int default_grid_size(long long n, int num, int den) {
  if (n <= 1) return 1;
  BigInt target = boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(num));
  long long lo = 1, hi = n;
  while (lo < hi) {
    long long mid = lo + (hi - lo) / 2;
    BigInt p = boost::multiprecision::pow(BigInt(mid), static_cast<unsigned>(den));
    if (p >= target)
      hi = mid;
    else
      lo = mid + 1;
  }
  return static_cast<int>(lo);
}

namespace detail {

constexpr std::uint8_t kSideL = 1, kSideR = 2, kSideB = 4, kSideT = 8;

struct RectInfo {
  std::uint8_t pattern = 0;  // bounded sides of the extended rectangle
  int cl = -1, cr = -1, rb = -1, rt = -1;
  RankBox box;  // coverage of P in rank space (identical for original/extended)
};

struct ColEdge {
  int rect;
  int span_lo, span_hi;  // inclusive row range of cells the edge intersects
};

// A side of a guessed rectangle: unbounded, pinned to a grid index, or bounded
// at an unknown index within [lo, hi].
struct SideState {
  enum Kind : std::uint8_t { Unbounded, At, Hidden } kind = Unbounded;
  int lo = 0, hi = 0;

  static SideState unbounded() { return {}; }
  static SideState at(int idx) { return {At, idx, idx}; }
  static SideState hidden(int lo, int hi) { return {Hidden, lo, hi}; }
};

struct SlotSpec {
  SideState xlo, xhi, ylo, yhi;
  bool needs_candidate = true;

  // Maybe-extent of the body in column space [min_col, max_col].
  int body_x_min(int cols) const {
    (void)cols;
    return xlo.kind == SideState::Unbounded ? 0 : xlo.lo;
  }
  int body_x_max(int cols) const {
    return xhi.kind == SideState::Unbounded ? cols - 1 : xhi.hi;
  }
  int body_y_min(int rows) const {
    (void)rows;
    return ylo.kind == SideState::Unbounded ? 0 : ylo.lo;
  }
  int body_y_max(int rows) const {
    return yhi.kind == SideState::Unbounded ? rows - 1 : yhi.hi;
  }

  bool certainly_inside_x(int c) const {
    bool lo_ok = xlo.kind == SideState::Unbounded || c > xlo.hi;
    bool hi_ok = xhi.kind == SideState::Unbounded || c < xhi.lo;
    return lo_ok && hi_ok;
  }
  bool certainly_inside_y(int r) const {
    bool lo_ok = ylo.kind == SideState::Unbounded || r > ylo.hi;
    bool hi_ok = yhi.kind == SideState::Unbounded || r < yhi.lo;
    return lo_ok && hi_ok;
  }
  bool maybe_overlaps_cols(int a, int b, int cols) const {
    return body_x_min(cols) <= b && body_x_max(cols) >= a;
  }
  bool maybe_overlaps_rows(int a, int b, int rows) const {
    return body_y_min(rows) <= b && body_y_max(rows) >= a;
  }
  bool certainly_disjoint_from_cell(int c, int r, int cols, int rows) const {
    return !maybe_overlaps_cols(c, c, cols) || !maybe_overlaps_rows(r, r, rows);
  }
  // Vertical edge pinned at column c? (At only.)
  bool vertical_edge_at(int c, bool& is_lo_side) const {
    if (xlo.kind == SideState::At && xlo.lo == c) {
      is_lo_side = true;
      return true;
    }
    if (xhi.kind == SideState::At && xhi.lo == c) {
      is_lo_side = false;
      return true;
    }
    return false;
  }
  bool horizontal_edge_at(int r, bool& is_lo_side) const {
    if (ylo.kind == SideState::At && ylo.lo == r) {
      is_lo_side = true;
      return true;
    }
    if (yhi.kind == SideState::At && yhi.lo == r) {
      is_lo_side = false;
      return true;
    }
    return false;
  }
  // Rows certainly spanned by a vertical edge of this slot (for edge-cell spans).
  int edge_span_y_lo() const { return ylo.kind == SideState::Unbounded ? 0 : ylo.lo; }
  int edge_span_y_hi(int rows) const { return yhi.kind == SideState::Unbounded ? rows - 1 : yhi.hi; }
  int edge_span_x_lo() const { return xlo.kind == SideState::Unbounded ? 0 : xlo.lo; }
  int edge_span_x_hi(int cols) const { return xhi.kind == SideState::Unbounded ? cols - 1 : xhi.hi; }
};

struct CellRangeList {
  // inclusive cell ranges [c0, c1] x [r0, r1]
  std::vector<std::array<int, 4>> ranges;
  void add(int c0, int c1, int r0, int r1) {
    if (c0 > c1 || r0 > r1) return;
    ranges.push_back({c0, c1, r0, r1});
  }
  void clear() { ranges.clear(); }
  bool empty() const { return ranges.empty(); }
};

// Walk test: from the crossing in cell (c, r) along the horizontal edge of
// slot hz, away from slot vt's body, checking that the remaining slot
// certainly avoids the passed cells.
inline bool walk_clear_horizontal(const SlotSpec* slots, int hz, int vt, int c, int r,
                                  bool vt_edge_is_lo, int cols, int rows) {
  const auto& h = slots[hz];
  int dir = vt_edge_is_lo ? -1 : +1;
  int end = dir < 0 ? h.edge_span_x_lo() : h.edge_span_x_hi(cols);
  int a = dir < 0 ? end : c + 1;
  int b = dir < 0 ? c - 1 : end;
  if (a > b) return true;
  int other = 3 - hz - vt;
  const auto& o = slots[other];
  if (!o.maybe_overlaps_cols(a, b, cols)) return true;
  if (!o.maybe_overlaps_rows(r, r, rows)) return true;
  return false;
}

inline bool walk_clear_vertical(const SlotSpec* slots, int hz, int vt, int c, int r,
                                bool hz_edge_is_lo, int cols, int rows) {
  const auto& v = slots[vt];
  int dir = hz_edge_is_lo ? -1 : +1;
  int end = dir < 0 ? v.edge_span_y_lo() : v.edge_span_y_hi(rows);
  int a = dir < 0 ? end : r + 1;
  int b = dir < 0 ? r - 1 : end;
  if (a > b) return true;
  int other = 3 - hz - vt;
  const auto& o = slots[other];
  if (!o.maybe_overlaps_rows(a, b, rows)) return true;
  if (!o.maybe_overlaps_cols(c, c, cols)) return true;
  return false;
}

// Cell assignment: -2 with a_mask set for type A, -1 for unassigned, else the
// slot index (type B, or type C decided by the walk rule).
inline int classify_cell(const SlotSpec* slots, int c, int r, int cols, int rows,
                         std::uint8_t& a_mask) {
  a_mask = 0;
  for (int j = 0; j < 3; ++j)
    if (slots[j].certainly_inside_x(c) && slots[j].certainly_inside_y(r)) a_mask |= 1 << j;
  if (a_mask) return -2;
  int vt = -1, hz = -1;
  bool vt_lo = false, hz_lo = false;
  for (int j = 0; j < 3; ++j) {
    bool lo;
    if (slots[j].vertical_edge_at(c, lo)) {
      int s0 = slots[j].edge_span_y_lo();
      int s1 = slots[j].edge_span_y_hi(rows);
      if (s0 <= r && r <= s1) {
        vt = j;
        vt_lo = lo;
      }
    }
    if (slots[j].horizontal_edge_at(r, lo)) {
      int s0 = slots[j].edge_span_x_lo();
      int s1 = slots[j].edge_span_x_hi(cols);
      if (s0 <= c && c <= s1) {
        hz = j;
        hz_lo = lo;
      }
    }
  }
  if (vt < 0 && hz < 0) return -1;
  if (vt >= 0 && hz >= 0 && vt != hz) {
    // type C: prefer the horizontal walk, then the vertical one; a wrong pick
    // is recovered through the step-2 gamma cells
    if (walk_clear_horizontal(slots, hz, vt, c, r, vt_lo, cols, rows)) return hz;
    if (walk_clear_vertical(slots, hz, vt, c, r, hz_lo, cols, rows)) return vt;
    return hz;
  }
  int j = vt >= 0 ? vt : hz;
  for (int k = 0; k < 3; ++k) {
    if (k == j) continue;
    if (!slots[k].certainly_disjoint_from_cell(c, r, cols, rows)) return -1;
  }
  return j;
}

}  // namespace detail

// One solving context over an oriented copy of the instance.
struct Workspace {
  std::vector<PointD> pts;
  std::vector<ExtRect> orig;
  std::vector<ExtRect> ext;
  Box2 b0{};
  PairOracle po;
  Grid grid;
  std::vector<int> colr, rowr;  // rank of each column/row start; size cols()+1 / rows()+1
  std::vector<detail::RectInfo> info;
  std::vector<std::vector<detail::ColEdge>> col_edges;  // vertical edges per column
  std::vector<std::vector<detail::ColEdge>> row_edges;  // horizontal edges per row
  int cols = 1, rows = 1;

  RankBox cell_box(int c0, int c1, int r0, int r1) const {  // inclusive cell ranges
    return RankBox{colr[c0], colr[c1 + 1], rowr[r0], rowr[r1 + 1]};
  }

  void build(std::vector<PointD> points, std::vector<ExtRect> rects, int g) {
    pts = std::move(points);
    orig = std::move(rects);
    auto bb = bounding_box(pts);
    b0 = bb ? *bb : Box2{0, 0, 0, 0};
    ext = bb ? extend_rects(orig, b0) : orig;
    po = PairOracle(pts, orig);
    grid = build_grid(ext, g);
    cols = grid.cols();
    rows = grid.rows();
    colr = grid.column_ranks(po.point_index().xaxis());
    rowr = grid.row_ranks(po.point_index().yaxis());
    int m = static_cast<int>(ext.size());
    info.resize(m);
    col_edges.assign(cols, {});
    row_edges.assign(rows, {});
    for (int i = 0; i < m; ++i) {
      const auto& e = grid.edges[i];
      auto& fi = info[i];
      fi.cl = e.left;
      fi.cr = e.right;
      fi.rb = e.bottom;
      fi.rt = e.top;
      fi.pattern = 0;
      if (e.left != kNoRank) fi.pattern |= detail::kSideL;
      if (e.right != kNoRank) fi.pattern |= detail::kSideR;
      if (e.bottom != kNoRank) fi.pattern |= detail::kSideB;
      if (e.top != kNoRank) fi.pattern |= detail::kSideT;
      fi.box = po.rect_box(i);
      int span_lo = e.bottom != kNoRank ? e.bottom : 0;
      int span_hi = e.top != kNoRank ? e.top : rows - 1;
      if (e.left != kNoRank) col_edges[e.left].push_back({i, span_lo, span_hi});
      if (e.right != kNoRank && e.right != e.left) col_edges[e.right].push_back({i, span_lo, span_hi});
      int cspan_lo = e.left != kNoRank ? e.left : 0;
      int cspan_hi = e.right != kNoRank ? e.right : cols - 1;
      if (e.bottom != kNoRank) row_edges[e.bottom].push_back({i, cspan_lo, cspan_hi});
      if (e.top != kNoRank && e.top != e.bottom) row_edges[e.top].push_back({i, cspan_lo, cspan_hi});
    }
  }
};

class Cover3Solver {
 public:
  Cover3Solver(std::vector<PointD> points, std::vector<ExtRect> rects, const SolveOptions& opt)
      : opt_(opt), pts_(std::move(points)), rects_(std::move(rects)) {
    m_ = static_cast<int>(rects_.size());
    n_ = static_cast<int>(pts_.size());
    weighted_ = false;
    bool any_unweighted = false;
    for (auto& r : rects_) {
      if (r.dim() != 2) throw Error(Error::Code::DimensionMismatch, "cover3 expects 2D rectangles");
      if (r.weight)
        weighted_ = true;
      else
        any_unweighted = true;
      for (const auto& s : r.sides) {
        if ((s.lo.is_finite() && !s.lo_closed) || (s.hi.is_finite() && !s.hi_closed))
          throw Error(Error::Code::OpenSidedInput, "cover3 requires closed rectangles");
      }
      if (!r.valid()) throw Error(Error::Code::InvalidArgument, "invalid rectangle");
    }
    if (weighted_ && any_unweighted)
      throw Error(Error::Code::InvalidArgument, "mixed weighted/unweighted rectangles");
    for (const auto& p : pts_)
      if (p.dim() != 2) throw Error(Error::Code::DimensionMismatch, "cover3 expects 2D points");
    unit_ = m_ > 0 && std::all_of(rects_.begin(), rects_.end(), is_unit_square);
    by_weight_.resize(m_);
    for (int i = 0; i < m_; ++i) by_weight_[i] = i;
    std::sort(by_weight_.begin(), by_weight_.end(), [&](int a, int b) {
      Rational wa = rects_[a].weight.value_or(Rational(1));
      Rational wb = rects_[b].weight.value_or(Rational(1));
      auto c = wa <=> wb;
      if (c != 0) return c < 0;
      return a < b;
    });
  }

  bool weighted() const { return weighted_; }
  bool unit() const { return unit_; }

  std::optional<Cover3Solution> solve(Variant v, SolveStats* stats) {
    auto t0 = std::chrono::steady_clock::now();
    stats_ = SolveStats{};
    stats_.n = n_;
    stats_.m = m_;
    best_valid_ = false;
    if (m_ < 3) return std::nullopt;

    switch (v) {
      case Variant::Basic:
        run_basic(default_g(v));
        break;
      case Variant::Unweighted:
        if (weighted_) throw Error(Error::Code::WeightedInput, "solve_unweighted requires unweighted input");
        run_unweighted(default_g(v));
        break;
      case Variant::WeightedRect:
        run_weighted_rect(default_g(v));
        break;
      case Variant::UnitWeighted:
        if (!unit_) throw Error(Error::Code::UnitSquareRequired, "unit-square variant requires unit squares");
        run_unit(default_g(v), false);
        break;
      case Variant::UnitUnweighted:
        if (!unit_) throw Error(Error::Code::UnitSquareRequired, "unit-square variant requires unit squares");
        if (weighted_) throw Error(Error::Code::WeightedInput, "unit unweighted variant requires unweighted input");
        run_unit(default_g(v), true);
        break;
      default:
        throw Error(Error::Code::InvalidArgument, "solver variant must be concrete");
    }

    auto t1 = std::chrono::steady_clock::now();
    stats_.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (stats) *stats = stats_;
    if (!best_valid_) return std::nullopt;
    Cover3Solution sol;
    sol.ids = best_ids_;
    sol.weight = weight_of(best_ids_[0]) + weight_of(best_ids_[1]) + weight_of(best_ids_[2]);
    sol.provenance = best_prov_;
    return sol;
  }

 private:
  // ---------- shared candidate bookkeeping ----------

  Rational weight_of(int i) const { return rects_[i].weight.value_or(Rational(1)); }

  struct LocalBest {
    bool valid = false;
    Rational weight;
    std::array<int, 3> ids{};
    Provenance prov = Provenance::Step1;
  };

  void merge_local(const LocalBest& lb) {
    if (!lb.valid) return;
    if (!best_valid_) {
      best_valid_ = true;
      best_weight_ = lb.weight;
      best_ids_ = lb.ids;
      best_prov_ = lb.prov;
      return;
    }
    auto c = lb.weight <=> best_weight_;
    if (c < 0 || (c == 0 && lb.ids < best_ids_)) {
      best_weight_ = lb.weight;
      best_ids_ = lb.ids;
      best_prov_ = lb.prov;
    }
  }

  void push_exact(LocalBest& lb, int a, int b, int c, Provenance prov) const {
    std::array<int, 3> ids{a, b, c};
    std::sort(ids.begin(), ids.end());
    if (weighted_) {
      Rational w = weight_of(a) + weight_of(b) + weight_of(c);
      if (!lb.valid) {
        lb = {true, std::move(w), ids, prov};
        return;
      }
      auto cmp = w <=> lb.weight;
      if (cmp < 0 || (cmp == 0 && ids < lb.ids)) lb = {true, std::move(w), ids, prov};
    } else {
      if (!lb.valid) {
        lb = {true, Rational(3), ids, prov};
        return;
      }
      if (ids < lb.ids) lb = {true, Rational(3), ids, prov};
    }
  }

  int cheapest_excluding(int a, int b) const {
    for (int id : by_weight_)
      if (id != a && id != b) return id;
    return -1;
  }

  void consider_pair(const Workspace& ws, LocalBest& lb, SolveStats& st, int i, int j,
                     Provenance prov) const {
    ++st.pair_queries;
    auto q = ws.po.best_third_boxes(ws.info[i].box, i == j ? ws.info[i].box : ws.info[j].box);
    if (!q) return;
    if (q->remainder_empty) {
      if (i == j) {
        int x = cheapest_excluding(i, -1);
        int y = cheapest_excluding(i, x);
        if (x >= 0 && y >= 0) push_exact(lb, i, x, y, prov);
      } else {
        int t = cheapest_excluding(i, j);
        if (t >= 0) push_exact(lb, i, j, t, prov);
      }
      return;
    }
    int t = q->id;
    if (t == i || t == j) return;
    if (i == j) {
      // single rectangle plus its best completion; finish as a pair
      ++st.pair_queries;
      auto q2 = ws.po.best_third_boxes(ws.info[i].box, ws.info[t].box);
      if (!q2) return;
      if (q2->remainder_empty) {
        int u = cheapest_excluding(i, t);
        if (u >= 0) push_exact(lb, i, t, u, prov);
      } else if (q2->id != i && q2->id != t) {
        push_exact(lb, i, t, q2->id, prov);
      }
      return;
    }
    push_exact(lb, i, j, t, prov);
  }

  // Candidates from bbox slots; fewer than three distinct ids finish through
  // the pair oracle.
  void push_slots(const Workspace& ws, LocalBest& lb, SolveStats& st, const std::vector<int>& ids,
                  Provenance prov) const {
    std::array<int, 3> d{-1, -1, -1};
    int k = 0;
    for (int id : ids) {
      if (id < 0) continue;
      bool dup = false;
      for (int t = 0; t < k; ++t) dup |= d[t] == id;
      if (!dup && k < 3) d[k++] = id;
    }
    if (k == 3) {
      ++st.triples_verified;
      if (ws.po.uncovered_count(ws.info[d[0]].box, ws.info[d[1]].box, ws.info[d[2]].box, true) == 0)
        push_exact(lb, d[0], d[1], d[2], prov);
      return;
    }
    if (k == 2) {
      consider_pair(ws, lb, st, d[0], d[1], prov);
      return;
    }
    if (k == 1) consider_pair(ws, lb, st, d[0], d[0], prov);
  }

  // ---------- steps 1 and 2 ----------

  void run_step1(const Workspace& ws, LocalBest& lb, SolveStats& st) const {
    auto process_lists = [&](const std::vector<std::vector<detail::ColEdge>>& lists, bool vertical) {
      for (std::size_t c = 0; c < lists.size(); ++c) {
        const auto& v = lists[c];
        for (std::size_t a = 0; a < v.size(); ++a) {
          for (std::size_t b = a + 1; b < v.size(); ++b) {
            int i = v[a].rect, j = v[b].rect;
            if (i == j) continue;
            // process a pair once, at its smallest shared line
            if (first_shared_line(ws, i, j, vertical) != static_cast<int>(c)) continue;
            ++st.step1_pairs;
            consider_pair(ws, lb, st, i, j, Provenance::Step1);
          }
        }
      }
    };
    process_lists(ws.col_edges, true);
    process_lists(ws.row_edges, false);
  }

  static int first_shared_line(const Workspace& ws, int i, int j, bool vertical) {
    const auto& a = ws.info[i];
    const auto& b = ws.info[j];
    int best = -1;
    auto upd = [&](int x, int y) {
      if (x >= 0 && x == y && (best < 0 || x < best)) best = x;
    };
    if (vertical) {
      upd(a.cl, b.cl);
      upd(a.cl, b.cr);
      upd(a.cr, b.cl);
      upd(a.cr, b.cr);
    } else {
      upd(a.rb, b.rb);
      upd(a.rb, b.rt);
      upd(a.rt, b.rb);
      upd(a.rt, b.rt);
    }
    return best;
  }

  // gamma cells of one edge in rank space; returns up to two cells.
  std::array<std::optional<CellRef>, 2> gamma_of_edge(const Workspace& ws, int rect, Side side) const {
    const auto& fi = ws.info[rect];
    std::array<std::optional<CellRef>, 2> out{};
    bool horizontal = side == Side::Bottom || side == Side::Top;
    auto has_uncovered = [&](int c, int r) {
      RankBox cb = ws.cell_box(c, c, r, r);
      long long inside = ws.po.point_index().count(cb);
      if (inside == 0) return false;
      auto overlap = cb.intersect(fi.box);
      long long covered = overlap ? ws.po.point_index().count(*overlap) : 0;
      return inside > covered;
    };
    if (horizontal) {
      int row = side == Side::Bottom ? fi.rb : fi.rt;
      if (row < 0) return out;
      int c0 = fi.cl >= 0 ? fi.cl : 0;
      int c1 = fi.cr >= 0 ? fi.cr : ws.cols - 1;
      for (int c = c0; c <= c1; ++c)
        if (has_uncovered(c, row)) {
          out[0] = CellRef{c, row};
          break;
        }
      if (out[0])
        for (int c = c1; c >= c0; --c)
          if (has_uncovered(c, row)) {
            out[1] = CellRef{c, row};
            break;
          }
    } else {
      int col = side == Side::Left ? fi.cl : fi.cr;
      if (col < 0) return out;
      int r0 = fi.rb >= 0 ? fi.rb : 0;
      int r1 = fi.rt >= 0 ? fi.rt : ws.rows - 1;
      for (int r = r0; r <= r1; ++r)
        if (has_uncovered(col, r)) {
          out[0] = CellRef{col, r};
          break;
        }
      if (out[0])
        for (int r = r1; r >= r0; --r)
          if (has_uncovered(col, r)) {
            out[1] = CellRef{col, r};
            break;
          }
    }
    return out;
  }

  void run_step2(const Workspace& ws, LocalBest& lb, SolveStats& st, int r0, int r1) const {
    for (int i = r0; i < r1; ++i) {
      for (Side side : {Side::Left, Side::Right, Side::Bottom, Side::Top}) {
        const auto& fi = ws.info[i];
        bool bounded = (side == Side::Left && fi.cl >= 0) || (side == Side::Right && fi.cr >= 0) ||
                       (side == Side::Bottom && fi.rb >= 0) || (side == Side::Top && fi.rt >= 0);
        if (!bounded) continue;
        auto cells = gamma_of_edge(ws, i, side);
        for (const auto& cell : cells) {
          if (!cell) continue;
          // rectangles with an edge intersecting this cell
          for (const auto& e : ws.col_edges[cell->col]) {
            if (e.rect == i) continue;
            if (e.span_lo <= cell->row && cell->row <= e.span_hi) {
              ++st.step2_pairs;
              consider_pair(ws, lb, st, i, e.rect, Provenance::Step2);
            }
          }
          for (const auto& e : ws.row_edges[cell->row]) {
            if (e.rect == i) continue;
            if (e.span_lo <= cell->col && cell->col <= e.span_hi) {
              ++st.step2_pairs;
              consider_pair(ws, lb, st, i, e.rect, Provenance::Step2);
            }
          }
        }
      }
    }
  }

  // ---------- the cell classifier ----------

  struct ClassifyScratch {
    std::vector<int> xcuts, ycuts;
    detail::CellRangeList region[3];
  };

  static void collect_cuts(const detail::SideState& s, std::vector<int>& cuts) {
    if (s.kind == detail::SideState::At) {
      cuts.push_back(s.lo);
      cuts.push_back(s.lo + 1);
    } else if (s.kind == detail::SideState::Hidden) {
      cuts.push_back(s.lo);
      cuts.push_back(s.hi + 1);
    }
  }

  // Evaluates one guessed configuration: classify cells blockwise, build the
  // per-slot regions, find candidates, and finish the triple.
  void eval_config(const Workspace& ws, LocalBest& lb, SolveStats& st,
                   const detail::SlotSpec* slots, ClassifyScratch& scratch, Provenance prov,
                   const RankBox* subtract_box, int exact_id) const {
    auto& xcuts = scratch.xcuts;
    auto& ycuts = scratch.ycuts;
    xcuts.clear();
    ycuts.clear();
    xcuts.push_back(0);
    ycuts.push_back(0);
    for (int j = 0; j < 3; ++j) {
      collect_cuts(slots[j].xlo, xcuts);
      collect_cuts(slots[j].xhi, xcuts);
      collect_cuts(slots[j].ylo, ycuts);
      collect_cuts(slots[j].yhi, ycuts);
    }
    xcuts.push_back(ws.cols);
    ycuts.push_back(ws.rows);
    auto prep = [](std::vector<int>& cuts, int limit) {
      for (auto& c : cuts) c = std::max(0, std::min(c, limit));
      std::sort(cuts.begin(), cuts.end());
      cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    };
    prep(xcuts, ws.cols);
    prep(ycuts, ws.rows);

    for (int j = 0; j < 3; ++j) scratch.region[j].clear();

    for (std::size_t xi = 0; xi + 1 < xcuts.size(); ++xi) {
      int c0 = xcuts[xi], c1 = xcuts[xi + 1] - 1;
      if (c0 > c1) continue;
      for (std::size_t yi = 0; yi + 1 < ycuts.size(); ++yi) {
        int r0 = ycuts[yi], r1 = ycuts[yi + 1] - 1;
        if (r0 > r1) continue;
        std::uint8_t mask;
        int who = detail::classify_cell(slots, c0, r0, ws.cols, ws.rows, mask);
        if (who == -2) {
          for (int j = 0; j < 3; ++j)
            if ((mask >> j) & 1) scratch.region[j].add(c0, c1, r0, r1);
        } else if (who >= 0) {
          scratch.region[who].add(c0, c1, r0, r1);
        }
      }
    }

    std::vector<int> ids;
    ids.reserve(3);
    if (exact_id >= 0) ids.push_back(exact_id);
    for (int j = 0; j < 3; ++j) {
      if (!slots[j].needs_candidate) continue;
      std::optional<RankExtremes> acc;
      for (const auto& rg : scratch.region[j].ranges) {
        RankBox box = ws.cell_box(rg[0], rg[1], rg[2], rg[3]);
        if (box.empty()) continue;
        if (subtract_box) {
          std::vector<RankBox> pieces;
          rank_box_subtract(box, *subtract_box, pieces);
          for (const auto& p : pieces) merge_extremes(ws, p, acc);
        } else {
          merge_extremes(ws, box, acc);
        }
      }
      if (!acc) continue;  // free slot
      auto hit = ws.po.enclosure_index().min_weight_enclosing_ranks(acc->xmin, acc->xmax, acc->ymin,
                                                                    acc->ymax);
      if (!hit) return;  // no rectangle can serve this slot
      ids.push_back(hit->id);
    }
    push_slots(ws, lb, st, ids, prov);
  }

  static void merge_extremes(const Workspace& ws, const RankBox& box,
                             std::optional<RankExtremes>& acc) {
    auto e = ws.po.point_index().extremes(box);
    if (!e) return;
    if (!acc) {
      acc = *e;
    } else {
      acc->xmin = std::min(acc->xmin, e->xmin);
      acc->xmax = std::max(acc->xmax, e->xmax);
      acc->ymin = std::min(acc->ymin, e->ymin);
      acc->ymax = std::max(acc->ymax, e->ymax);
    }
  }

  // ---------- step 3 style enumeration ----------

  struct SlotOption {
    std::uint8_t pattern;
    std::int16_t cl, cr, rb, rt;
    friend bool operator<(const SlotOption& a, const SlotOption& b) {
      return std::tie(a.pattern, a.cl, a.cr, a.rb, a.rt) <
             std::tie(b.pattern, b.cl, b.cr, b.rb, b.rt);
    }
    friend bool operator==(const SlotOption& a, const SlotOption& b) {
      return std::tie(a.pattern, a.cl, a.cr, a.rb, a.rt) ==
             std::tie(b.pattern, b.cl, b.cr, b.rb, b.rt);
    }
    int edge_count() const {
      return ((pattern & detail::kSideL) ? 1 : 0) + ((pattern & detail::kSideR) ? 1 : 0) +
             ((pattern & detail::kSideB) ? 1 : 0) + ((pattern & detail::kSideT) ? 1 : 0);
    }
  };

  static detail::SlotSpec slot_from_option(const SlotOption& o) {
    detail::SlotSpec s;
    if (o.pattern & detail::kSideL) s.xlo = detail::SideState::at(o.cl);
    if (o.pattern & detail::kSideR) s.xhi = detail::SideState::at(o.cr);
    if (o.pattern & detail::kSideB) s.ylo = detail::SideState::at(o.rb);
    if (o.pattern & detail::kSideT) s.yhi = detail::SideState::at(o.rt);
    return s;
  }

  // Deduplicated realized tuples; for the unweighted variants only tuples that
  // are maximal within their side pattern survive (outward dominance).
  static std::vector<SlotOption> realized_options(const Workspace& ws, bool maximal_only) {
    std::vector<SlotOption> opts;
    opts.reserve(ws.info.size());
    for (const auto& fi : ws.info) {
      opts.push_back({fi.pattern, static_cast<std::int16_t>(fi.cl), static_cast<std::int16_t>(fi.cr),
                      static_cast<std::int16_t>(fi.rb), static_cast<std::int16_t>(fi.rt)});
    }
    std::sort(opts.begin(), opts.end());
    opts.erase(std::unique(opts.begin(), opts.end()), opts.end());
    if (!maximal_only) return opts;
    // outward order: smaller cl/rb and larger cr/rt is larger
    std::vector<SlotOption> keep;
    for (const auto& a : opts) {
      bool dominated = false;
      for (const auto& b : opts) {
        if (a.pattern != b.pattern || a == b) continue;
        bool strict = true;
        if (a.pattern & detail::kSideL) strict &= b.cl < a.cl;
        if (a.pattern & detail::kSideR) strict &= b.cr > a.cr;
        if (a.pattern & detail::kSideB) strict &= b.rb < a.rb;
        if (a.pattern & detail::kSideT) strict &= b.rt > a.rt;
        if (strict && a.pattern != 0) {
          dominated = true;
          break;
        }
      }
      if (!dominated) keep.push_back(a);
    }
    return keep;
  }

  static bool columns_disjoint(const SlotOption& a, const SlotOption& b) {
    auto share = [](int x, int y) { return x >= 0 && x == y; };
    int acl = (a.pattern & detail::kSideL) ? a.cl : -1;
    int acr = (a.pattern & detail::kSideR) ? a.cr : -1;
    int bcl = (b.pattern & detail::kSideL) ? b.cl : -1;
    int bcr = (b.pattern & detail::kSideR) ? b.cr : -1;
    if (share(acl, bcl) || share(acl, bcr) || share(acr, bcl) || share(acr, bcr)) return false;
    int arb = (a.pattern & detail::kSideB) ? a.rb : -1;
    int art = (a.pattern & detail::kSideT) ? a.rt : -1;
    int brb = (b.pattern & detail::kSideB) ? b.rb : -1;
    int brt = (b.pattern & detail::kSideT) ? b.rt : -1;
    if (share(arb, brb) || share(arb, brt) || share(art, brb) || share(art, brt)) return false;
    return true;
  }

  void run_step3(const Workspace& ws, LocalBest& lb, SolveStats& st, bool maximal_only,
                 int max_edges) const {
    auto opts = realized_options(ws, maximal_only);
    int no = static_cast<int>(opts.size());
    ClassifyScratch scratch;
    detail::SlotSpec slots[3];
    for (int i = 0; i < no; ++i) {
      int ei = opts[i].edge_count();
      if (ei > max_edges) continue;
      slots[0] = slot_from_option(opts[i]);
      for (int j = i; j < no; ++j) {
        int ej = opts[j].edge_count();
        if (ei + ej > max_edges) continue;
        if (!columns_disjoint(opts[i], opts[j])) continue;
        slots[1] = slot_from_option(opts[j]);
        for (int k = j; k < no; ++k) {
          if (ei + ej + opts[k].edge_count() > max_edges) continue;
          if (!columns_disjoint(opts[i], opts[k]) || !columns_disjoint(opts[j], opts[k])) continue;
          slots[2] = slot_from_option(opts[k]);
          ++st.step3_configs;
          eval_config(ws, lb, st, slots, scratch, Provenance::Step3, nullptr, -1);
        }
      }
    }
  }

  // ---------- weighted-rectangle cases ----------

  // Case I: two of the three rectangles are separated by a grid line. Guess
  // the remaining rectangle's identity and the separating line; the side
  // bounding box determines the second rectangle.
  void run_case_disjoint(const Workspace& ws, LocalBest& lb, SolveStats& st, int r0, int r1,
                         Provenance prov) const {
    const auto& pi = ws.po.point_index();
    int nx = pi.xaxis().size(), ny = pi.yaxis().size();
    for (int i = r0; i < r1; ++i) {
      const RankBox& ibox = ws.info[i].box;
      for (int c = 1; c < ws.cols; ++c) {
        int cut = ws.colr[c];
        RankBox half{0, cut, 0, ny};
        evaluate_side(ws, lb, st, i, ibox, half, prov);
      }
      for (int r = 1; r < ws.rows; ++r) {
        int cut = ws.rowr[r];
        RankBox half{0, nx, 0, cut};
        evaluate_side(ws, lb, st, i, ibox, half, prov);
      }
    }
  }

  void evaluate_side(const Workspace& ws, LocalBest& lb, SolveStats& st, int i, const RankBox& ibox,
                     const RankBox& half, Provenance prov) const {
    ++st.case1_queries;
    // bounding box of points in the half-plane not covered by rectangle i
    std::vector<RankBox> pieces;
    if (!half.empty()) pieces.push_back(half);
    pieces = rank_boxes_subtract(std::move(pieces), ibox);
    std::optional<RankExtremes> acc;
    for (const auto& p : pieces) merge_extremes(ws, p, acc);
    if (!acc) return;  // other branches find the pair directly
    auto hit = ws.po.enclosure_index().min_weight_enclosing_ranks(acc->xmin, acc->xmax, acc->ymin,
                                                                  acc->ymax);
    if (!hit) return;
    consider_pair(ws, lb, st, i, hit->id, prov);
  }

  // Case II of the weighted algorithm: at most 7 edges total (full
  // enumeration), or exactly 8 with one hidden edge (the hidden side is
  // resolved to its most outward position consistent with being covered).
  void run_weighted_case2(const Workspace& ws, LocalBest& lb, SolveStats& st) const {
    auto opts = realized_options(ws, false);
    int no = static_cast<int>(opts.size());
    ClassifyScratch scratch;
    detail::SlotSpec slots[3];
    // eight edges, one hidden: designate the hidden slot as slot index 2
    for (int hidden_slot_opt = 0; hidden_slot_opt < no; ++hidden_slot_opt) {
      const SlotOption& h = opts[hidden_slot_opt];
      int eh = h.edge_count();
      if (eh == 0) continue;
      for (int hs = 0; hs < 4; ++hs) {
        std::uint8_t bit = static_cast<std::uint8_t>(1 << hs);
        if (!(h.pattern & bit)) continue;
        // project away the hidden side
        SlotOption proj = h;
        proj.pattern = static_cast<std::uint8_t>(h.pattern & ~bit);
        if (hs == 0) proj.cl = -1;
        if (hs == 1) proj.cr = -1;
        if (hs == 2) proj.rb = -1;
        if (hs == 3) proj.rt = -1;
        for (int i = 0; i < no; ++i) {
          int ei = opts[i].edge_count();
          if (ei + eh > 8) continue;
          if (!columns_disjoint(opts[i], proj)) continue;
          for (int j = i; j < no; ++j) {
            if (ei + opts[j].edge_count() + eh != 8) continue;
            if (!columns_disjoint(opts[i], opts[j]) || !columns_disjoint(opts[j], proj)) continue;
            ++st.case2_configs;
            slots[0] = slot_from_option(opts[i]);
            slots[1] = slot_from_option(opts[j]);
            slots[2] = slot_from_option(proj);
            slots[2].needs_candidate = false;
            if (!resolve_hidden_side(ws, slots, 2, hs)) continue;
            eval_config(ws, lb, st, slots, scratch, Provenance::CaseII, nullptr, -1);
          }
        }
      }
    }
    // at most 7 edges total: plain enumeration with all candidates
    run_step3_limited(ws, lb, st, 7, Provenance::CaseII);
  }

  void run_step3_limited(const Workspace& ws, LocalBest& lb, SolveStats& st, int max_edges,
                         Provenance prov) const {
    auto opts = realized_options(ws, false);
    int no = static_cast<int>(opts.size());
    ClassifyScratch scratch;
    detail::SlotSpec slots[3];
    for (int i = 0; i < no; ++i) {
      int ei = opts[i].edge_count();
      if (ei > max_edges) continue;
      slots[0] = slot_from_option(opts[i]);
      for (int j = i; j < no; ++j) {
        int ej = opts[j].edge_count();
        if (ei + ej > max_edges) continue;
        if (!columns_disjoint(opts[i], opts[j])) continue;
        slots[1] = slot_from_option(opts[j]);
        for (int k = j; k < no; ++k) {
          if (ei + ej + opts[k].edge_count() > max_edges) continue;
          if (!columns_disjoint(opts[i], opts[k]) || !columns_disjoint(opts[j], opts[k])) continue;
          slots[2] = slot_from_option(opts[k]);
          ++st.case2_configs;
          eval_config(ws, lb, st, slots, scratch, prov, nullptr, -1);
        }
      }
    }
  }

  // Most outward position of slot `s`'s side `hs` such that the whole edge
  // line is certainly covered by the other two slots; false when none exists.
  bool resolve_hidden_side(const Workspace& ws, detail::SlotSpec* slots, int s, int hs) const {
    bool vertical = hs <= 1;
    bool lo_side = hs == 0 || hs == 2;
    const auto& spec = slots[s];
    int inner_lo, inner_hi;  // positions consistent with the slot's own shape
    if (vertical) {
      inner_lo = lo_side ? 0 : (spec.xlo.kind == detail::SideState::At ? spec.xlo.lo : 0);
      inner_hi = lo_side ? (spec.xhi.kind == detail::SideState::At ? spec.xhi.lo : ws.cols - 1)
                         : ws.cols - 1;
    } else {
      inner_lo = lo_side ? 0 : (spec.ylo.kind == detail::SideState::At ? spec.ylo.lo : 0);
      inner_hi = lo_side ? (spec.yhi.kind == detail::SideState::At ? spec.yhi.lo : ws.rows - 1)
                         : ws.rows - 1;
    }
    // perpendicular extent of the hidden edge
    int p0, p1;
    if (vertical) {
      p0 = spec.edge_span_y_lo();
      p1 = spec.edge_span_y_hi(ws.rows);
    } else {
      p0 = spec.edge_span_x_lo();
      p1 = spec.edge_span_x_hi(ws.cols);
    }
    auto covered = [&](int pos) {
      // skip positions on other slots' guessed lines (step 1 handles those)
      for (int k = 0; k < 3; ++k) {
        if (k == s) continue;
        bool lo;
        if (vertical ? slots[k].vertical_edge_at(pos, lo) : slots[k].horizontal_edge_at(pos, lo))
          return false;
      }
      for (int q = p0; q <= p1; ++q) {
        bool ok = false;
        for (int k = 0; k < 3 && !ok; ++k) {
          if (k == s) continue;
          int c = vertical ? pos : q;
          int r = vertical ? q : pos;
          ok = slots[k].certainly_inside_x(c) && slots[k].certainly_inside_y(r);
        }
        if (!ok) return false;
      }
      return true;
    };
    // scan from the outward end
    int found = -1;
    if (lo_side) {
      for (int pos = inner_lo; pos <= inner_hi; ++pos)
        if (covered(pos)) {
          found = pos;
          break;
        }
    } else {
      for (int pos = inner_hi; pos >= inner_lo; --pos)
        if (covered(pos)) {
          found = pos;
          break;
        }
    }
    if (found < 0) return false;
    auto& side = vertical ? (lo_side ? slots[s].xlo : slots[s].xhi)
                          : (lo_side ? slots[s].ylo : slots[s].yhi);
    side = detail::SideState::at(found);
    return true;
  }

  // Case III of the weighted algorithm: guess the identity of one rectangle of
  // the triple, the grid lines of a (at most) two-sided second one, and the
  // single relevant edge of the third.
  void run_weighted_case3(const Workspace& ws, LocalBest& lb, SolveStats& st, int r0, int r1) const {
    auto opts = realized_options(ws, false);
    std::vector<SlotOption> small;
    for (const auto& o : opts)
      if (o.edge_count() <= 2) small.push_back(o);
    ClassifyScratch scratch;
    detail::SlotSpec slots[3];
    for (int rid = r0; rid < r1; ++rid) {
      const auto& fi = ws.info[rid];
      detail::SlotSpec exact;
      if (fi.cl >= 0) exact.xlo = detail::SideState::at(fi.cl);
      if (fi.cr >= 0) exact.xhi = detail::SideState::at(fi.cr);
      if (fi.rb >= 0) exact.ylo = detail::SideState::at(fi.rb);
      if (fi.rt >= 0) exact.yhi = detail::SideState::at(fi.rt);
      exact.needs_candidate = false;
      for (const auto& o : small) {
        slots[0] = slot_from_option(o);
        slots[1] = exact;
        // choices of the third rectangle's one relevant edge: none, or a side
        // with its line index
        for (int es = -1; es < 4; ++es) {
          int lim = es < 0 ? 1 : (es <= 1 ? ws.cols : ws.rows);
          for (int idx = 0; idx < lim; ++idx) {
            detail::SlotSpec third;
            third.xlo = detail::SideState::hidden(0, ws.cols - 1);
            third.xhi = detail::SideState::hidden(0, ws.cols - 1);
            third.ylo = detail::SideState::hidden(0, ws.rows - 1);
            third.yhi = detail::SideState::hidden(0, ws.rows - 1);
            if (es == 0) third.xlo = detail::SideState::at(idx);
            if (es == 1) third.xhi = detail::SideState::at(idx);
            if (es == 2) third.ylo = detail::SideState::at(idx);
            if (es == 3) third.yhi = detail::SideState::at(idx);
            third.needs_candidate = false;
            slots[2] = third;
            ++st.case3_configs;
            eval_config(ws, lb, st, slots, scratch, Provenance::CaseIII, &fi.box, rid);
          }
        }
      }
    }
  }

  // ---------- unit-square cases ----------

  // Case II (unit squares): middle square guessed by identity; the lower-left
  // neighbour is pinned by the bounding box of the points below/left of the
  // middle square's top-right corner that it does not cover.
  void run_unit_case2(const Workspace& ws, LocalBest& lb, SolveStats& st, int r0, int r1) const {
    const auto& pi = ws.po.point_index();
    int nx = pi.xaxis().size(), ny = pi.yaxis().size();
    for (int i = r0; i < r1; ++i) {
      const auto& box = ws.info[i].box;
      // quadrant x <= x+, y <= y+ in rank space
      RankBox quad{0, box.x1, 0, box.y1};
      std::vector<RankBox> pieces;
      if (!quad.empty()) pieces.push_back(quad);
      pieces = rank_boxes_subtract(std::move(pieces), box);
      std::optional<RankExtremes> acc;
      for (const auto& p : pieces) merge_extremes(ws, p, acc);
      (void)nx;
      (void)ny;
      if (!acc) {
        consider_pair(ws, lb, st, i, i, Provenance::UnitCaseII);
        continue;
      }
      auto hit = ws.po.enclosure_index().min_weight_enclosing_ranks(acc->xmin, acc->xmax, acc->ymin,
                                                                    acc->ymax);
      if (!hit) continue;
      consider_pair(ws, lb, st, i, hit->id, Provenance::UnitCaseII);
    }
  }

  // Case III (unit squares), canonical orientation: centers ordered
  // left-to-right with the middle square highest; first square keeps {right,
  // top} edges, second {left, right} with a hidden bottom, third {bottom, top}
  // with a hidden left.
  void run_unit_case3(const Workspace& ws, LocalBest& lb, SolveStats& st, bool maximal_only) const {
    // realized corner guesses for the first square
    std::vector<std::pair<int, int>> first;  // (cr, rt)
    std::vector<std::pair<int, int>> cols2;  // (cl, cr) of {L,R,B} squares
    std::vector<std::pair<int, int>> rows3;  // (rb, rt) of {B,T,L} squares
    for (const auto& fi : ws.info) {
      if (fi.pattern == (detail::kSideR | detail::kSideT)) first.push_back({fi.cr, fi.rt});
      if (fi.pattern == (detail::kSideL | detail::kSideR | detail::kSideB))
        cols2.push_back({fi.cl, fi.cr});
      if (fi.pattern == (detail::kSideB | detail::kSideT | detail::kSideL))
        rows3.push_back({fi.rb, fi.rt});
    }
    auto dedup = [](std::vector<std::pair<int, int>>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedup(first);
    dedup(cols2);
    dedup(rows3);
    if (maximal_only) {
      // keep corners not strictly dominated (larger in both coordinates)
      std::vector<std::pair<int, int>> keep;
      for (auto& a : first) {
        bool dom = false;
        for (auto& b : first)
          if (b.first > a.first && b.second > a.second) {
            dom = true;
            break;
          }
        if (!dom) keep.push_back(a);
      }
      first.swap(keep);
    }
    ClassifyScratch scratch;
    detail::SlotSpec slots[3];
    for (auto [cr1, rt1] : first) {
      for (auto [cl2, cr2] : cols2) {
        if (!(cl2 < cr1 && cr1 < cr2)) continue;
        for (auto [rb3, rt3] : rows3) {
          if (!(rb3 < rt1 && rt1 < rt3)) continue;
          // hidden sides live strictly between the guessed lines
          if (cl2 + 1 > cr1 - 1 || rb3 + 1 > rt1 - 1) continue;
          ++st.case3_configs;
          slots[0] = detail::SlotSpec{};
          slots[0].xhi = detail::SideState::at(cr1);
          slots[0].yhi = detail::SideState::at(rt1);
          slots[1] = detail::SlotSpec{};
          slots[1].xlo = detail::SideState::at(cl2);
          slots[1].xhi = detail::SideState::at(cr2);
          slots[1].ylo = detail::SideState::hidden(rb3 + 1, rt1 - 1);
          slots[2] = detail::SlotSpec{};
          slots[2].ylo = detail::SideState::at(rb3);
          slots[2].yhi = detail::SideState::at(rt3);
          slots[2].xlo = detail::SideState::hidden(cl2 + 1, cr1 - 1);
          eval_config(ws, lb, st, slots, scratch, Provenance::UnitCaseIII, nullptr, -1);
        }
      }
    }
  }

  // ---------- drivers ----------

  int default_g(Variant v) const {
    if (opt_.grid_size) return std::max(1, *opt_.grid_size);
    long long n = std::max<long long>({n_, m_, 2});
    switch (v) {
      case Variant::Basic: return default_grid_size(n, 2, 9);
      case Variant::Unweighted: return default_grid_size(n, 1, 3);
      case Variant::WeightedRect: return default_grid_size(n, 1, 4);
      case Variant::UnitWeighted: return default_grid_size(n, 2, 5);
      case Variant::UnitUnweighted: return default_grid_size(n, 1, 2);
      default: return 1;
    }
  }

  template <typename Fn>
  void parallel_rects(int m, Fn&& fn) {
    int threads = std::max(1, opt_.threads);
    if (threads == 1 || m < 2 * threads) {
      LocalBest lb;
      SolveStats st;
      fn(0, m, lb, st);
      merge_local(lb);
      stats_.merge(st);
      return;
    }
    std::vector<LocalBest> lbs(threads);
    std::vector<SolveStats> sts(threads);
    std::vector<std::thread> pool;
    int chunk = (m + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      int lo = t * chunk, hi = std::min(m, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi, t] { fn(lo, hi, lbs[t], sts[t]); });
    }
    for (auto& th : pool) th.join();
    for (auto& lb : lbs) merge_local(lb);
    for (auto& st : sts) stats_.merge(st);
  }

  Workspace& workspace(int orient, int g) {
    auto& slot = ws_[orient];
    if (slot) return *slot;
    std::vector<PointD> pts = pts_;
    std::vector<ExtRect> rcs = rects_;
    bool fx = orient & 1, fy = orient & 2;
    if (fx || fy) {
      for (auto& p : pts) {
        if (fx) p[0] = -p[0];
        if (fy) p[1] = -p[1];
      }
      for (auto& r : rcs) {
        if (fx) {
          Interval s = r.sides[0];
          r.sides[0] = Interval(-s.hi, -s.lo, s.hi_closed, s.lo_closed);
        }
        if (fy) {
          Interval s = r.sides[1];
          r.sides[1] = Interval(-s.hi, -s.lo, s.hi_closed, s.lo_closed);
        }
      }
    }
    slot = std::make_unique<Workspace>();
    slot->build(std::move(pts), std::move(rcs), g);
    return *slot;
  }

  void run_basic(int g) {
    stats_.g = g;
    Workspace& ws = workspace(0, g);
    run_common_steps(ws);
    LocalBest lb;
    SolveStats st;
    run_step3(ws, lb, st, false, 8);
    merge_local(lb);
    stats_.merge(st);
  }

  void run_unweighted(int g) {
    stats_.g = g;
    Workspace& ws = workspace(0, g);
    run_common_steps(ws);
    LocalBest lb;
    SolveStats st;
    run_step3(ws, lb, st, true, 8);
    merge_local(lb);
    stats_.merge(st);
  }

  void run_weighted_rect(int g) {
    stats_.g = g;
    Workspace& ws = workspace(0, g);
    run_common_steps(ws);
    parallel_rects(m_, [&](int lo, int hi, LocalBest& lb, SolveStats& st) {
      run_case_disjoint(ws, lb, st, lo, hi, Provenance::CaseI);
      run_weighted_case3(ws, lb, st, lo, hi);
    });
    LocalBest lb;
    SolveStats st;
    run_weighted_case2(ws, lb, st);
    merge_local(lb);
    stats_.merge(st);
  }

  void run_unit(int g, bool unweighted) {
    stats_.g = g;
    Workspace& ws0 = workspace(0, g);
    run_common_steps(ws0);
    parallel_rects(m_, [&](int lo, int hi, LocalBest& lb, SolveStats& st) {
      run_case_disjoint(ws0, lb, st, lo, hi, Provenance::CaseI);
    });
    for (int orient : {0, 2}) {  // identity and y-reflection
      Workspace& ws = workspace(orient, g);
      parallel_rects(m_, [&](int lo, int hi, LocalBest& lb, SolveStats& st) {
        run_unit_case2(ws, lb, st, lo, hi);
      });
    }
    for (int orient : {0, 1, 2, 3}) {
      Workspace& ws = workspace(orient, g);
      LocalBest lb;
      SolveStats st;
      run_unit_case3(ws, lb, st, unweighted);
      merge_local(lb);
      stats_.merge(st);
    }
  }

  void run_common_steps(Workspace& ws) {
    LocalBest lb;
    SolveStats st;
    run_step1(ws, lb, st);
    merge_local(lb);
    stats_.merge(st);
    parallel_rects(m_, [&](int lo, int hi, LocalBest& plb, SolveStats& pst) {
      run_step2(ws, plb, pst, lo, hi);
    });
  }

  SolveOptions opt_;
  std::vector<PointD> pts_;
  std::vector<ExtRect> rects_;
  int n_ = 0, m_ = 0;
  bool weighted_ = false, unit_ = false;
  std::vector<int> by_weight_;
  std::unique_ptr<Workspace> ws_[4];

  SolveStats stats_;
  bool best_valid_ = false;
  Rational best_weight_;
  std::array<int, 3> best_ids_{};
  Provenance best_prov_ = Provenance::Step1;
};

namespace detail {
inline std::optional<Cover3Solution> solve_as(const std::vector<PointD>& points,
                                              const std::vector<ExtRect>& rects, Variant v,
                                              std::optional<int> g, SolveStats* stats) {
  SolveOptions opt;
  opt.grid_size = g;
  Cover3Solver solver(points, rects, opt);
  return solver.solve(v, stats);
}
}  // namespace detail

inline std::optional<Cover3Solution> solve_basic(const std::vector<PointD>& points,
                                                 const std::vector<ExtRect>& rects,
                                                 std::optional<int> g = std::nullopt,
                                                 SolveStats* stats = nullptr) {
  return detail::solve_as(points, rects, Variant::Basic, g, stats);
}
inline std::optional<Cover3Solution> solve_unweighted(const std::vector<PointD>& points,
                                                      const std::vector<ExtRect>& rects,
                                                      std::optional<int> g = std::nullopt,
                                                      SolveStats* stats = nullptr) {
  return detail::solve_as(points, rects, Variant::Unweighted, g, stats);
}
inline std::optional<Cover3Solution> solve_weighted_rect(const std::vector<PointD>& points,
                                                         const std::vector<ExtRect>& rects,
                                                         std::optional<int> g = std::nullopt,
                                                         SolveStats* stats = nullptr) {
  return detail::solve_as(points, rects, Variant::WeightedRect, g, stats);
}
inline std::optional<Cover3Solution> solve_unit_squares_weighted(
    const std::vector<PointD>& points, const std::vector<ExtRect>& rects,
    std::optional<int> g = std::nullopt, SolveStats* stats = nullptr) {
  return detail::solve_as(points, rects, Variant::UnitWeighted, g, stats);
}
inline std::optional<Cover3Solution> solve_unit_squares_unweighted(
    const std::vector<PointD>& points, const std::vector<ExtRect>& rects,
    std::optional<int> g = std::nullopt, SolveStats* stats = nullptr) {
  return detail::solve_as(points, rects, Variant::UnitUnweighted, g, stats);
}

// Variant dispatch: AUTO picks the most specific applicable solver, ORACLE
// delegates to the brute-force reference (in oracles.hpp; wired by solve()).
inline Variant resolve_variant(Variant v, bool unit, bool weighted) {
  if (v != Variant::Auto) return v;
  if (unit) return weighted ? Variant::UnitWeighted : Variant::UnitUnweighted;
  return weighted ? Variant::WeightedRect : Variant::Unweighted;
}

inline std::optional<Cover3Solution> solve(const std::vector<PointD>& points,
                                           const std::vector<ExtRect>& rects,
                                           const SolveOptions& opt = SolveOptions{},
                                           SolveStats* stats = nullptr) {
  if (opt.variant == Variant::Oracle) {
    bool weighted = false;
    for (const auto& r : rects) weighted = weighted || r.weight.has_value();
    auto res = brute_cover_k(points, rects, 3, weighted);
    if (!res) return std::nullopt;
    Cover3Solution sol;
    std::copy_n(res->ids.begin(), 3, sol.ids.begin());
    sol.weight = res->weight;
    sol.provenance = Provenance::Oracle;
    return sol;
  }
  Cover3Solver solver(points, rects, opt);
  Variant v = resolve_variant(opt.variant, solver.unit(), solver.weighted());
  return solver.solve(v, stats);
}

// Cell classification of a guessed configuration, exposed for inspection. The
// cfg uses grid indices; kNoRank marks an extended side.
struct GuessConfig {
  struct SlotGuess {
    int cl = kNoRank, cr = kNoRank, rb = kNoRank, rt = kNoRank;
  };
  std::array<SlotGuess, 3> slots;
};

struct CellAssignment {
  // per cell: type (0 none, 'A', 'B', 'C') and assigned slot mask
  std::vector<std::uint8_t> type;
  std::vector<std::uint8_t> mask;
  int cols = 0, rows = 0;

  std::uint8_t type_at(int c, int r) const { return type[static_cast<std::size_t>(r) * cols + c]; }
  std::uint8_t mask_at(int c, int r) const { return mask[static_cast<std::size_t>(r) * cols + c]; }
};

namespace detail {

inline SlotSpec spec_from_guess(const GuessConfig::SlotGuess& g) {
  SlotSpec s;
  if (g.cl != kNoRank) s.xlo = SideState::at(g.cl);
  if (g.cr != kNoRank) s.xhi = SideState::at(g.cr);
  if (g.rb != kNoRank) s.ylo = SideState::at(g.rb);
  if (g.rt != kNoRank) s.yhi = SideState::at(g.rt);
  return s;
}

}  // namespace detail

// classify_cells against a built grid; validates the distinct-line invariant.
inline CellAssignment classify_cells(const GuessConfig& cfg, const Grid& grid) {
  detail::SlotSpec slots[3];
  for (int j = 0; j < 3; ++j) slots[j] = detail::spec_from_guess(cfg.slots[j]);
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      auto shares = [](int x, int y) { return x != kNoRank && x == y; };
      const auto& ga = cfg.slots[a];
      const auto& gb = cfg.slots[b];
      if (shares(ga.cl, gb.cl) || shares(ga.cl, gb.cr) || shares(ga.cr, gb.cl) ||
          shares(ga.cr, gb.cr) || shares(ga.rb, gb.rb) || shares(ga.rb, gb.rt) ||
          shares(ga.rt, gb.rb) || shares(ga.rt, gb.rt))
        throw Error(Error::Code::InvalidArgument,
                    "classify_cells: edges of different rectangles share a grid line");
    }
  CellAssignment out;
  out.cols = grid.cols();
  out.rows = grid.rows();
  out.type.assign(static_cast<std::size_t>(out.cols) * out.rows, 0);
  out.mask.assign(static_cast<std::size_t>(out.cols) * out.rows, 0);
  for (int r = 0; r < out.rows; ++r) {
    for (int c = 0; c < out.cols; ++c) {
      std::size_t at = static_cast<std::size_t>(r) * out.cols + c;
      std::uint8_t amask = 0;
      int who = detail::classify_cell(slots, c, r, out.cols, out.rows, amask);
      if (who == -2) {
        out.type[at] = 'A';
        out.mask[at] = amask;
      } else if (who >= 0) {
        // distinguish B from C by the number of touching slots
        int touching = 0;
        for (int j = 0; j < 3; ++j) {
          bool lo;
          bool t = (slots[j].vertical_edge_at(c, lo) && slots[j].edge_span_y_lo() <= r &&
                    r <= slots[j].edge_span_y_hi(out.rows)) ||
                   (slots[j].horizontal_edge_at(r, lo) && slots[j].edge_span_x_lo() <= c &&
                    c <= slots[j].edge_span_x_hi(out.cols));
          if (t) ++touching;
        }
        out.type[at] = touching >= 2 ? 'C' : 'B';
        out.mask[at] = static_cast<std::uint8_t>(1 << who);
      }
    }
  }
  return out;
}

}  // namespace cover3
