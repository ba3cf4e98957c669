// Rectilinear discrete 3-center in the plane, plus exact Euclidean discrete
// k-center helpers used by the hardness constructions.
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "cover3/cover3.hpp"
#include "cover3/geometry.hpp"
#include "cover3/oracles.hpp"

namespace cover3 {

struct D3cOptions {
  std::optional<int> grid_size;
  int threads = 1;
  bool materialize_candidates = false;  // sort all O(n^2) radii instead of rank selection
};

// Feasibility of covering P with three axis-aligned squares of L-inf radius r
// centered at supply points (supply defaults to P). Reduces to unweighted
// unit-square cover after rescaling the side 2r to 1.
inline std::optional<std::array<int, 3>> rect_d3c_decide(const std::vector<PointD>& points,
                                                         const Rational& radius,
                                                         const std::vector<PointD>* supply = nullptr,
                                                         const D3cOptions& opt = D3cOptions{}) {
  const std::vector<PointD>& centers = supply ? *supply : points;
  if (radius < Rational(0)) throw Error(Error::Code::InvalidArgument, "negative radius");
  int c = static_cast<int>(centers.size());
  if (c == 0) return points.empty() ? std::optional<std::array<int, 3>>({0, 0, 0}) : std::nullopt;

  if (radius == Rational(0)) {
    // every distinct point must coincide with a center
    std::vector<int> used;
    for (const auto& p : points) {
      int hit = -1;
      for (int j = 0; j < c && hit < 0; ++j)
        if (centers[j] == p) hit = j;
      if (hit < 0) return std::nullopt;
      if (std::find(used.begin(), used.end(), hit) == used.end()) used.push_back(hit);
      if (used.size() > 3) return std::nullopt;
    }
    std::array<int, 3> out{};
    for (std::size_t i = 0; i < 3; ++i) out[i] = i < used.size() ? used[i] : used.empty() ? 0 : used[0];
    return out;
  }

  // handle tiny candidate sets without the solver (it needs three distinct squares)
  auto covers_with = [&](const std::vector<int>& ids) {
    for (const auto& p : points) {
      bool ok = false;
      for (int j : ids) ok = ok || linf_distance(p, centers[j]) <= radius;
      if (!ok) return false;
    }
    return true;
  };
  if (c < 3) {
    std::vector<int> all(c);
    for (int j = 0; j < c; ++j) all[j] = j;
    if (!covers_with(all)) return std::nullopt;
    std::array<int, 3> out{};
    for (int i = 0; i < 3; ++i) out[i] = all[std::min<std::size_t>(i, all.size() - 1)];
    return out;
  }

  Rational scale = Rational(1) / (Rational(2) * radius);
  std::vector<PointD> sp;
  sp.reserve(points.size());
  for (const auto& p : points) sp.push_back(PointD(p[0] * scale, p[1] * scale));
  std::vector<ExtRect> squares;
  squares.reserve(c);
  Rational half(BigInt(1), BigInt(2));
  for (int j = 0; j < c; ++j) {
    Rational cx = centers[j][0] * scale, cy = centers[j][1] * scale;
    squares.push_back(
        ExtRect::closed_box({cx - half, cy - half}, {cx + half, cy + half}, std::nullopt, j));
  }
  SolveOptions sopt;
  sopt.grid_size = opt.grid_size;
  sopt.threads = opt.threads;
  Cover3Solver solver(std::move(sp), std::move(squares), sopt);
  auto sol = solver.solve(Variant::UnitUnweighted, nullptr);
  if (!sol) return std::nullopt;
  return sol->ids;
}

namespace detail {

// Sorted-matrix view of the pairwise coordinate differences along one axis.
struct DiffAxis {
  std::vector<Rational> a, b;  // sorted

  // number of pairs with |a_i - b_j| <= t, and the largest such value
  void count_and_snap(const Rational& t, BigInt& cnt, std::optional<Rational>& snap_lo,
                      std::optional<Rational>& snap_hi) const {
    // two-pointer windows over b for each a_i
    std::size_t lo = 0, hi = 0;
    for (const auto& x : a) {
      while (lo < b.size() && b[lo] < x - t) ++lo;
      while (hi < b.size() && b[hi] <= x + t) ++hi;
      cnt += BigInt(static_cast<long long>(hi - lo));
      if (lo < hi) {
        // extreme achieved differences within the window
        Rational d1 = (x - b[lo]).abs();
        Rational d2 = (b[hi - 1] - x).abs();
        Rational dmax = max(d1, d2);
        if (!snap_lo || dmax > *snap_lo) snap_lo = dmax;
      }
      if (lo > 0) {
        Rational d = x - b[lo - 1];
        if (!snap_hi || d < *snap_hi) snap_hi = d;
      }
      if (hi < b.size()) {
        Rational d = b[hi] - x;
        if (!snap_hi || d < *snap_hi) snap_hi = d;
      }
    }
  }
};

}  // namespace detail

struct D3cResult {
  Rational radius;
  std::array<int, 3> centers;
};

// Optimal rectilinear discrete 3-center: minimal radius at which the decision
// succeeds. The optimum is always a realized coordinate difference; it is
// located by rank-style bisection over the two implicit sorted difference
// multisets, with O(n) counting/snapping per probe.
inline D3cResult rect_d3c_optimize(const std::vector<PointD>& points,
                                   const std::vector<PointD>* supply = nullptr,
                                   const D3cOptions& opt = D3cOptions{}) {
  if (points.empty()) return D3cResult{Rational(0), {0, 0, 0}};
  const std::vector<PointD>& centers = supply ? *supply : points;

  auto z = rect_d3c_decide(points, Rational(0), supply, opt);
  if (z) return D3cResult{Rational(0), *z};

  detail::DiffAxis dx, dy;
  for (const auto& p : points) {
    dx.a.push_back(p[0]);
    dy.a.push_back(p[1]);
  }
  for (const auto& s : centers) {
    dx.b.push_back(s[0]);
    dy.b.push_back(s[1]);
  }
  std::sort(dx.a.begin(), dx.a.end());
  std::sort(dx.b.begin(), dx.b.end());
  std::sort(dy.a.begin(), dy.a.end());
  std::sort(dy.b.begin(), dy.b.end());

  if (opt.materialize_candidates) {
    std::vector<Rational> cand;
    for (const auto& x : dx.a)
      for (const auto& s : dx.b) cand.push_back((x - s).abs());
    for (const auto& y : dy.a)
      for (const auto& s : dy.b) cand.push_back((y - s).abs());
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::size_t lo = 0, hi = cand.size() - 1;
    std::optional<std::array<int, 3>> best = rect_d3c_decide(points, cand[hi], supply, opt);
    while (lo < hi) {
      std::size_t mid = lo + (hi - lo) / 2;
      auto f = rect_d3c_decide(points, cand[mid], supply, opt);
      if (f) {
        best = f;
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    return D3cResult{cand[lo], *best};
  }

  // value interval (vlo infeasible, vhi feasible]; shrink it with snapped probes
  Rational vlo(0);
  Rational vhi = max(dx.a.empty() ? Rational(0) : (dx.a.back() - dx.b.front()).abs(),
                     dy.a.empty() ? Rational(0) : (dy.a.back() - dy.b.front()).abs());
  vhi = max(vhi, max((dx.b.back() - dx.a.front()).abs(), (dy.b.back() - dy.a.front()).abs()));
  auto feasible_hi = rect_d3c_decide(points, vhi, supply, opt);
  if (!feasible_hi) throw Error(Error::Code::InvalidArgument, "rect_d3c_optimize: no feasible cover");
  std::array<int, 3> witness = *feasible_hi;

  while (true) {
    Rational mid = (vlo + vhi) / Rational(2);
    BigInt cnt = 0;
    std::optional<Rational> below, above;
    dx.count_and_snap(mid, cnt, below, above);
    dy.count_and_snap(mid, cnt, below, above);
    Rational probe;
    if (below && *below > vlo) {
      probe = *below;
    } else if (above && *above < vhi) {
      probe = *above;
    } else {
      break;  // no candidate strictly inside (vlo, vhi)
    }
    auto f = rect_d3c_decide(points, probe, supply, opt);
    if (f) {
      vhi = probe;
      witness = *f;
    } else {
      vlo = probe;
    }
  }
  return D3cResult{vhi, witness};
}

// Exact minimum squared L2 radius over all k-subsets of candidate centers;
// direct subset enumeration, independent of the other oracle implementation.
inline CenterSolution euclid_dkc_brute(const std::vector<PointD>& points, int k,
                                       const std::vector<PointD>* supply = nullptr,
                                       const OracleBudget& budget = OracleBudget{}) {
  const std::vector<PointD>& centers = supply ? *supply : points;
  int n = static_cast<int>(points.size());
  int c = static_cast<int>(centers.size());
  if (k > c) throw Error(Error::Code::InvalidArgument, "euclid_dkc_brute: k exceeds candidates");
  if (detail::combinations(c, k) > budget.max_combinations)
    throw Error(Error::Code::BudgetExceeded, "euclid_dkc_brute: budget exceeded");
  std::vector<std::vector<Rational>> d2(n, std::vector<Rational>(c));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < c; ++j) d2[i][j] = squared_distance(points[i], centers[j]);

  std::optional<CenterSolution> best;
  std::vector<int> pick(k);
  std::function<void(int, int)> rec = [&](int from, int depth) {
    if (depth == k) {
      Rational worst(0);
      for (int i = 0; i < n; ++i) {
        Rational m = d2[i][pick[0]];
        for (int t = 1; t < k; ++t) m = min(m, d2[i][pick[t]]);
        worst = max(worst, m);
        if (best && worst > best->radius) return;
      }
      if (!best || worst < best->radius) {
        std::vector<int> ids(pick.begin(), pick.end());
        best = CenterSolution{worst, ids};
      }
      return;
    }
    for (int j = from; j <= c - (k - depth); ++j) {
      pick[depth] = j;
      rec(j + 1, depth + 1);
    }
  };
  if (n == 0) return CenterSolution{Rational(0), std::vector<int>(k, 0)};
  rec(0, 0);
  return *best;
}

// Two-ball coverage decision via a Boolean matrix product over bitsets: true
// iff some pair p,q has no witness z farther than r from both. For L2 the
// threshold is the squared radius.
inline bool d2c_matrix_decide(const std::vector<PointD>& points, const Rational& threshold,
                              Metric metric) {
  int n = static_cast<int>(points.size());
  if (n == 0) return true;
  std::vector<detail::Bitset> far(n, detail::Bitset(n));
  for (int p = 0; p < n; ++p)
    for (int z = 0; z < n; ++z) {
      Rational d = metric == Metric::Linf ? linf_distance(points[p], points[z])
                                          : squared_distance(points[p], points[z]);
      if (d > threshold) far[p].set(z);
    }
  for (int p = 0; p < n; ++p)
    for (int q = p; q < n; ++q)
      if (and_empty(far[p], far[q])) return true;
  return false;
}

}  // namespace cover3
