// Seeded instance generators, timing records, and the structural-bound
// measurements (guess counts, grid occupancy, maximal-point counts).
#pragma once

#include <chrono>
#include <sstream>
#include <string>
#include <vector>

#include "cover3/cover3.hpp"
#include "cover3/oracles.hpp"
#include "cover3/rng.hpp"

namespace cover3 {

struct RandomInstance {
  std::vector<PointD> points;
  std::vector<ExtRect> rects;
};

// Random rectangles over a [0, span]^2 region; on odd trials the points are
// planted inside the union of three of the rectangles so that an optimal
// cover exists and the optimisation paths are exercised.
inline RandomInstance make_rect_instance(std::uint64_t seed, int n, int m, bool weighted,
                                         bool planted) {
  SplitMix64 rng(seed);
  RandomInstance inst;
  long long span = 30;
  for (int j = 0; j < m; ++j) {
    Rational x1 = rng.rational(-2, span + 2, 2), x2 = rng.rational(-2, span + 2, 2);
    Rational y1 = rng.rational(-2, span + 2, 2), y2 = rng.rational(-2, span + 2, 2);
    if (x2 < x1) std::swap(x1, x2);
    if (y2 < y1) std::swap(y1, y2);
    if (planted) {
      x2 += Rational(rng.range(0, 10));
      y2 += Rational(rng.range(0, 10));
    }
    inst.rects.push_back(ExtRect::closed_box(
        {x1, y1}, {x2, y2},
        weighted ? std::optional<Rational>(Rational(rng.range(1, 100))) : std::nullopt, j));
  }
  if (planted) {
    int a = static_cast<int>(rng.below(m)), b = static_cast<int>(rng.below(m)),
        c = static_cast<int>(rng.below(m));
    for (int i = 0; i < n; ++i) {
      int pick = static_cast<int>(rng.below(3));
      const ExtRect& r = inst.rects[pick == 0 ? a : pick == 1 ? b : c];
      Rational xlo = r.sides[0].lo.value(), xhi = r.sides[0].hi.value();
      Rational ylo = r.sides[1].lo.value(), yhi = r.sides[1].hi.value();
      Rational fx(BigInt(rng.range(0, 8)), BigInt(8)), fy(BigInt(rng.range(0, 8)), BigInt(8));
      inst.points.push_back(PointD(xlo + fx * (xhi - xlo), ylo + fy * (yhi - ylo)));
    }
  } else {
    for (int i = 0; i < n; ++i)
      inst.points.push_back(PointD(rng.rational(0, span, 2), rng.rational(0, span, 2)));
  }
  return inst;
}

// Random unit squares; coordinates live on an eighth-integer grid spread over
// a sqrt(n)-sized region so density stays roughly constant across sizes.
inline RandomInstance make_unit_instance(std::uint64_t seed, int n, int m, bool weighted,
                                         bool planted) {
  SplitMix64 rng(seed);
  RandomInstance inst;
  long long span = 4;
  while (span * span < std::max(n, m)) ++span;
  for (int j = 0; j < m; ++j) {
    Rational x = rng.rational(-1, span, 8), y = rng.rational(-1, span, 8);
    inst.rects.push_back(ExtRect::closed_box(
        {x, y}, {x + Rational(1), y + Rational(1)},
        weighted ? std::optional<Rational>(Rational(rng.range(1, 100))) : std::nullopt, j));
  }
  if (planted) {
    int a = static_cast<int>(rng.below(m)), b = static_cast<int>(rng.below(m)),
        c = static_cast<int>(rng.below(m));
    for (int i = 0; i < n; ++i) {
      int pick = static_cast<int>(rng.below(3));
      const ExtRect& r = inst.rects[pick == 0 ? a : pick == 1 ? b : c];
      Rational fx(BigInt(rng.range(0, 8)), BigInt(8)), fy(BigInt(rng.range(0, 8)), BigInt(8));
      inst.points.push_back(PointD(r.sides[0].lo.value() + fx, r.sides[1].lo.value() + fy));
    }
  } else {
    for (int i = 0; i < n; ++i)
      inst.points.push_back(PointD(rng.rational(0, span, 8), rng.rational(0, span, 8)));
  }
  return inst;
}

struct BenchRecord {
  std::string variant;
  int n = 0, m = 0, g = 0;
  double wall_ms = 0;
  long long step1_pairs = 0, step2_pairs = 0, step3_configs = 0;
  long long case1_queries = 0, case2_configs = 0, case3_configs = 0;
  std::string result;  // exact weight, or "infeasible"
  bool oracle_match = true;

  static std::string csv_header() {
    return "variant,n,m,g,wall_ms,step1_pairs,step2_pairs,step3_configs,case1_queries,"
           "case2_configs,case3_configs,result,oracle_match";
  }
  std::string csv_line() const {
    std::ostringstream s;
    s << variant << ',' << n << ',' << m << ',' << g << ',' << wall_ms << ',' << step1_pairs << ','
      << step2_pairs << ',' << step3_configs << ',' << case1_queries << ',' << case2_configs << ','
      << case3_configs << ',' << result << ',' << (oracle_match ? 1 : 0);
    return s.str();
  }
};

inline BenchRecord run_one(const RandomInstance& inst, Variant v, const SolveOptions& opt,
                           bool oracle_check) {
  Cover3Solver solver(inst.points, inst.rects, opt);
  SolveStats st;
  auto sol = solver.solve(v, &st);
  BenchRecord rec;
  rec.variant = to_string(v);
  rec.n = st.n;
  rec.m = st.m;
  rec.g = st.g;
  rec.wall_ms = st.wall_ms;
  rec.step1_pairs = st.step1_pairs;
  rec.step2_pairs = st.step2_pairs;
  rec.step3_configs = st.step3_configs;
  rec.case1_queries = st.case1_queries;
  rec.case2_configs = st.case2_configs;
  rec.case3_configs = st.case3_configs;
  rec.result = sol ? sol->weight.str() : "infeasible";
  if (oracle_check) {
    bool weighted = !inst.rects.empty() && inst.rects.front().weight.has_value();
    auto oracle = brute_cover_k(inst.points, inst.rects, 3, weighted);
    rec.oracle_match = oracle.has_value() == sol.has_value() &&
                       (!oracle || oracle->weight == sol->weight);
  }
  return rec;
}

// Mean query times of the range structures at one size; used to check the
// polylogarithmic query-cost contract as data (time ratios across sizes).
struct StructureBench {
  int n = 0;
  double point_query_us = 0;      // extremes + count per random box
  double enclosure_query_us = 0;  // min-weight encloser per random box

  static std::string csv_header() { return "n,point_query_us,enclosure_query_us"; }
  std::string csv_line() const {
    std::ostringstream s;
    s << n << ',' << point_query_us << ',' << enclosure_query_us;
    return s.str();
  }
};

inline StructureBench bench_structures(std::uint64_t seed, int n, int queries = 4000) {
  SplitMix64 rng(seed);
  long long span = 4;
  while (span * span < n) ++span;
  std::vector<PointD> pts;
  for (int i = 0; i < n; ++i)
    pts.push_back(PointD(rng.rational(0, span, 8), rng.rational(0, span, 8)));
  std::vector<ExtRect> squares;
  for (int j = 0; j < n; ++j) {
    Rational x = rng.rational(-1, span, 8), y = rng.rational(-1, span, 8);
    squares.push_back(ExtRect::closed_box({x, y}, {x + Rational(1), y + Rational(1)},
                                          Rational(rng.range(1, 100)), j));
  }
  PointIndex pidx(pts);
  EnclosureIndex eidx(squares);
  eidx.attach_point_axes(pidx.xaxis(), pidx.yaxis());

  StructureBench out;
  out.n = n;
  int nx = pidx.xaxis().size(), ny = pidx.yaxis().size();
  std::vector<RankBox> boxes;
  for (int t = 0; t < queries; ++t) {
    int x0 = static_cast<int>(rng.below(nx)), x1 = static_cast<int>(rng.below(nx));
    int y0 = static_cast<int>(rng.below(ny)), y1 = static_cast<int>(rng.below(ny));
    boxes.push_back(RankBox{std::min(x0, x1), std::max(x0, x1) + 1, std::min(y0, y1),
                            std::max(y0, y1) + 1});
  }
  volatile long long sink = 0;
  auto t0 = std::chrono::steady_clock::now();
  for (const auto& b : boxes) {
    sink += pidx.count(b);
    auto e = pidx.extremes(b);
    if (e) sink += e->xmin;
  }
  out.point_query_us =
      std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - t0).count() /
      queries;
  t0 = std::chrono::steady_clock::now();
  for (const auto& b : boxes) {
    auto e = pidx.extremes(b);
    if (!e) continue;
    auto hit = eidx.min_weight_enclosing_ranks(e->xmin, e->xmax, e->ymin, e->ymax);
    if (hit) sink += hit->id;
  }
  out.enclosure_query_us =
      std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - t0).count() /
      queries;
  (void)sink;
  return out;
}

// Interior occupancy of every grid column/row against the bound ceil(4m/g).
inline bool grid_occupancy_ok(const std::vector<ExtRect>& rects, int g, long long* worst = nullptr) {
  Grid grid = build_grid(rects, g);
  long long m = static_cast<long long>(rects.size());
  long long bound = (4 * std::max<long long>(m, 1) + g - 1) / g;
  std::vector<Rational> xs, ys;
  for (const auto& r : rects) {
    bool lx = r.sides[0].lo.is_finite(), hx = r.sides[0].hi.is_finite();
    bool ly = r.sides[1].lo.is_finite(), hy = r.sides[1].hi.is_finite();
    int vy = (ly ? 1 : 0) + (hy ? 1 : 0), vx = (lx ? 1 : 0) + (hx ? 1 : 0);
    for (int k = 0; k < vy; ++k) {
      if (lx) xs.push_back(r.sides[0].lo.value());
      if (hx) xs.push_back(r.sides[0].hi.value());
    }
    for (int k = 0; k < vx; ++k) {
      if (ly) ys.push_back(r.sides[1].lo.value());
      if (hy) ys.push_back(r.sides[1].hi.value());
    }
  }
  auto max_interior = [](std::vector<Rational> coords, const std::vector<Rational>& cuts) {
    std::sort(coords.begin(), coords.end());
    long long w = 0;
    std::size_t i = 0;
    for (std::size_t seg = 0; seg <= cuts.size(); ++seg) {
      long long cnt = 0;
      while (i < coords.size() && (seg == cuts.size() || coords[i] < cuts[seg])) {
        bool on_lower_cut = seg > 0 && coords[i] == cuts[seg - 1];
        if (!on_lower_cut) ++cnt;
        ++i;
      }
      w = std::max(w, cnt);
    }
    return w;
  };
  long long w = std::max(max_interior(xs, grid.xb), max_interior(ys, grid.yb));
  if (worst) *worst = w;
  return w <= bound;
}

}  // namespace cover3
