// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code is the number of
// failed criteria. Individual criteria can be selected by number on the
// command line.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cover3/bench.hpp"
#include "cover3/cover3.hpp"
#include "cover3/grid.hpp"
#include "cover3/kcenter.hpp"
#include "cover3/oracles.hpp"
#include "cover3/reductions.hpp"
#include "cover3/rng.hpp"

using namespace cover3;
using Clock = std::chrono::steady_clock;

namespace {

// structural-bound constants, pinned: measured step-3 configuration counts
// must stay within kGuessC * g^8 (baseline) and kGuessC * g^5 (unweighted)
constexpr long long kGuessC = 4096;
constexpr int kThreads = 2;

Rational q(long long num, long long den = 1) { return Rational(BigInt(num), BigInt(den)); }

struct Criterion {
  bool pass = true;
  std::vector<std::string> notes;
  long long checks = 0, failures = 0;

  void fail(const std::string& note) {
    pass = false;
    if (notes.size() < 8) notes.push_back(note);
  }
  void count(bool ok, const std::string& note) {
    ++checks;
    if (!ok) {
      ++failures;
      fail(note);
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------- criterion 1
// Oracle equivalence for the cover solvers: 500 weighted-rectangle and 500
// unit-square instances, every applicable variant exactly matches brute force.
Criterion criterion1() {
  Criterion c;
  for (int t = 0; t < 500; ++t) {
    std::uint64_t seed = 0xC1000 + t;
    int n = 5 + t % 36;
    int m = 5 + (t * 7) % 36;
    auto inst = make_rect_instance(seed, n, m, true, t % 2 == 1);
    auto oracle = brute_cover_k(inst.points, inst.rects, 3, true);
    for (Variant v : {Variant::Basic, Variant::WeightedRect}) {
      SolveOptions opt;
      opt.threads = kThreads;
      Cover3Solver solver(inst.points, inst.rects, opt);
      auto sol = solver.solve(v, nullptr);
      bool ok = oracle.has_value() == sol.has_value() && (!oracle || sol->weight == oracle->weight);
      c.count(ok, std::string("rect instance ") + std::to_string(t) + " variant " + to_string(v));
    }
  }
  for (int t = 0; t < 500; ++t) {
    std::uint64_t seed = 0xC1A00 + t;
    bool weighted = t % 4 < 2;
    int n = 5 + t % 36;
    int m = 5 + (t * 11) % 36;
    auto inst = make_unit_instance(seed, n, m, weighted, t % 2 == 1);
    auto oracle = brute_cover_k(inst.points, inst.rects, 3, weighted);
    std::vector<Variant> vs{Variant::Basic, Variant::WeightedRect,
                            weighted ? Variant::UnitWeighted : Variant::UnitUnweighted};
    if (!weighted) vs.push_back(Variant::Unweighted);
    for (Variant v : vs) {
      SolveOptions opt;
      opt.threads = kThreads;
      Cover3Solver solver(inst.points, inst.rects, opt);
      auto sol = solver.solve(v, nullptr);
      bool ok = oracle.has_value() == sol.has_value() && (!oracle || sol->weight == oracle->weight);
      c.count(ok, std::string("unit instance ") + std::to_string(t) + " variant " + to_string(v));
    }
  }
  return c;
}

// ---------------------------------------------------------------- criterion 2
// Discrete 3-center: optimizer equals brute force exactly on 200 instances;
// the decider is monotone on 10-step radius ladders.
Criterion criterion2() {
  Criterion c;
  for (int t = 0; t < 200; ++t) {
    SplitMix64 rng(0xC2000 + t);
    int n = 4 + static_cast<int>(rng.below(22));
    std::vector<PointD> pts;
    for (int i = 0; i < n; ++i)
      pts.push_back(PointD(rng.rational(0, 24, 2), rng.rational(0, 24, 2)));
    D3cOptions opt;
    opt.threads = kThreads;
    auto fast = rect_d3c_optimize(pts, nullptr, opt);
    auto ref = brute_discrete_kcenter(pts, 3, Metric::Linf);
    c.count(fast.radius == ref.radius,
            "optimizer instance " + std::to_string(t) + ": got " + fast.radius.str() + " want " +
                ref.radius.str());
    if (t % 10 == 0) {
      bool prev = false;
      bool monotone = true;
      for (int step = 0; step <= 10; ++step) {
        Rational r = ref.radius * q(step, 5);
        bool feas = rect_d3c_decide(pts, r, nullptr, opt).has_value();
        if (prev && !feas) monotone = false;
        prev = prev || feas;
      }
      c.count(monotone, "decision ladder not monotone at instance " + std::to_string(t));
    }
  }
  return c;
}

// ---------------------------------------------------------------- criterion 3
// Reduction equivalences at exhaustive tiny scale.
WeightedGraph graph_from_mask(int n, std::uint32_t mask, SplitMix64* wrng) {
  WeightedGraph g;
  for (int i = 0; i < n; ++i)
    g.labels.push_back(Rational(BigInt(i), BigInt(10LL * std::max(1, n - 1))));
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1) {
        GraphEdge e{u, v, std::nullopt};
        if (wrng) e.w = Rational(BigInt(static_cast<long long>(wrng->below(101))), BigInt(1000));
        g.edges.push_back(e);
      }
  return g;
}

void criterion3a_range(int n, std::uint32_t lo, std::uint32_t hi, Criterion* c, std::mutex* mu) {
  for (std::uint32_t mask = lo; mask < hi; ++mask) {
    WeightedGraph g = graph_from_mask(n, mask, nullptr);
    bool tri = graph_has_triangle(g);
    auto i9 = gen_triangle_boxes_r3(g);
    bool ok9 = brute_cover_k(i9.points, i9.ranges, 3, false).has_value() == tri;
    auto i10 = gen_triangle_orthants_r4(g);
    bool ok10 = brute_cover_k(i10.points, i10.ranges, 3, false).has_value() == tri;
    auto i11 = gen_d3c_r4(g);
    bool ok11 =
        brute_kcenter_decide(i11.points, i11.points, 3, q(5), Metric::Linf).has_value() == tri;
    std::lock_guard<std::mutex> lk(*mu);
    if (!(ok9 && ok10 && ok11)) {
      c->count(false, "criterion 3a n=" + std::to_string(n) + " mask=" + std::to_string(mask) +
                          (ok9 ? "" : " [boxes]") + (ok10 ? "" : " [orthants]") +
                          (ok11 ? "" : " [3-center]"));
    } else {
      c->checks += 3;
    }
  }
}

// Fast exhaustive sweep over one-vertex-per-part hypergraphs: all candidate
// points have fixed coordinates, so a precomputed within-threshold matrix
// turns each of the 2^20 edge subsets into bitmask work. The model is
// validated against the real generator + oracle pipeline on sampled subsets.
struct TwoCenterSweep {
  std::vector<std::uint32_t> within;  // per candidate: mask of candidates within threshold

  template <typename Point, typename Dist, typename Within>
  void build(const std::vector<Point>& candidates, Dist dist, Within strictly_within) {
    within.assign(candidates.size(), 0);
    for (std::size_t a = 0; a < candidates.size(); ++a)
      for (std::size_t b = 0; b < candidates.size(); ++b)
        if (strictly_within(dist(candidates[a], candidates[b]))) within[a] |= 1u << b;
  }

  bool decide(std::uint32_t existing) const {
    for (std::size_t a = 0; a < within.size(); ++a) {
      if (!(existing >> a & 1)) continue;
      for (std::size_t b = a; b < within.size(); ++b) {
        if (!(existing >> b & 1)) continue;
        if ((existing & ~(within[a] | within[b])) == 0) return true;
      }
    }
    return false;
  }
};

PartiteHypergraph3 hyper_from_mask(const std::vector<std::array<int, 3>>& combos,
                                   std::uint32_t mask, int parts) {
  PartiteHypergraph3 h;
  for (int p = 0; p < parts; ++p) h.parts.push_back({q(p + 1, parts + 1)});
  for (std::size_t i = 0; i < combos.size(); ++i)
    if (mask >> i & 1)
      h.edges.push_back(HyperEdge{{{{combos[i][0], 0}, {combos[i][1], 0}, {combos[i][2], 0}}}});
  return h;
}

Criterion criterion3() {
  Criterion c;
  std::mutex mu;

  // (a) all graphs on <= 6 vertices, three constructions. A one-vertex graph
  // cannot carry both label anchors; it has no edges, so all three
  // constructions are vacuously infeasible and it counts as checked.
  c.checks += 3;
  for (int n = 2; n <= 6; ++n) {
    std::uint32_t total = 1u << (n * (n - 1) / 2);
    std::uint32_t mid = total / 2;
    std::thread t1(criterion3a_range, n, 0u, mid, &c, &mu);
    std::thread t2(criterion3a_range, n, mid, total, &c, &mu);
    t1.join();
    t2.join();
  }
  std::cerr << "  [3a] graphs on <=6 vertices done, failures so far " << c.failures << "\n";

  // (b) weighted triangle construction on 100 random weighted graphs, n <= 6
  for (int t = 0; t < 100; ++t) {
    SplitMix64 rng(0xC3B00 + t);
    int n = 3 + static_cast<int>(rng.below(4));
    auto g =
        graph_from_mask(n, static_cast<std::uint32_t>(rng.below(1u << (n * (n - 1) / 2))), &rng);
    auto inst = gen_weighted_triangle_r2(g);
    auto rep = verify_reduction(ReductionKind::WeightedTriangleR2, &g, nullptr, inst);
    c.count(rep.agree, "criterion 3b instance " + std::to_string(t) + ": " + rep.graph_side +
                           " vs " + rep.geometry_side);
  }

  // (c) size-6 construction on 50 random weighted graphs, n <= 5, labels in
  // (0, 1/10] (a label of exactly 0 in a clique role collapses a half-open
  // rectangle side; rescaling is the caller's responsibility)
  for (int t = 0; t < 50; ++t) {
    SplitMix64 rng(0xC3C00 + t);
    int n = 4 + static_cast<int>(rng.below(2));
    WeightedGraph g;
    for (int i = 0; i < n; ++i) g.labels.push_back(q(i + 1, 10 * n));
    g.labels.back() = q(1, 10);
    int bit = 0;
    std::uint32_t mask = static_cast<std::uint32_t>(rng.below(1u << (n * (n - 1) / 2)));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++bit)
        if (mask >> bit & 1)
          g.edges.push_back(
              {u, v, Rational(BigInt(static_cast<long long>(rng.below(101))), BigInt(1000))});
    auto inst = gen_4clique_cover6_r2(g);
    auto rep = verify_reduction(ReductionKind::Clique4Cover6R2, &g, nullptr, inst);
    c.count(rep.agree, "criterion 3c instance " + std::to_string(t) + ": " + rep.graph_side +
                           " vs " + rep.geometry_side);
  }
  std::cerr << "  [3b,3c] done, failures so far " << c.failures << "\n";

  std::vector<std::array<int, 3>> combos;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k) combos.push_back({i, j, k});
  int combo123 = -1, combo456 = -1;
  for (std::size_t i = 0; i < combos.size(); ++i) {
    if (combos[i] == std::array<int, 3>{0, 1, 2}) combo123 = static_cast<int>(i);
    if (combos[i] == std::array<int, 3>{3, 4, 5}) combo456 = static_cast<int>(i);
  }
  std::vector<int> z_index(combos.size(), -1);
  {
    int zi = 2;
    for (std::size_t i = 0; i < combos.size(); ++i) {
      if (static_cast<int>(i) == combo123 || static_cast<int>(i) == combo456) continue;
      z_index[i] = zi++;
    }
  }
  auto existing_mask = [&](std::uint32_t mask) {
    std::uint32_t ex = (1u << 20) | (1u << 21);  // the two auxiliary points
    if (mask >> combo123 & 1) ex |= 1u << 0;
    if (mask >> combo456 & 1) ex |= 1u << 1;
    for (std::size_t i = 0; i < combos.size(); ++i)
      if (z_index[i] >= 0 && !(mask >> i & 1)) ex |= 1u << z_index[i];
    return ex;
  };

  // (d) hyperclique center constructions: exhaustive over one vertex per part
  {
    auto full = hyper_from_mask(combos, 0xFFFFFu, 6);
    auto empty = hyper_from_mask(combos, 0, 6);
    auto inst_full12 = gen_hyperclique_d2c_r13(full);    // p, q, s+, s-
    auto inst_empty12 = gen_hyperclique_d2c_r13(empty);  // 18 z's, s+, s-
    auto inst_full13 = gen_hyperclique_dkc(full, 2);
    auto inst_empty13 = gen_hyperclique_dkc(empty, 2);

    std::vector<PointD> uni12;
    uni12.push_back(inst_full12.points[0]);
    uni12.push_back(inst_full12.points[1]);
    for (std::size_t i = 0; i + 2 < inst_empty12.points.size(); ++i)
      uni12.push_back(inst_empty12.points[i]);
    uni12.push_back(inst_full12.points[2]);
    uni12.push_back(inst_full12.points[3]);
    std::vector<Point39> uni13;
    uni13.push_back(inst_full13.ext_points[0]);
    uni13.push_back(inst_full13.ext_points[1]);
    for (std::size_t i = 0; i + 2 < inst_empty13.ext_points.size(); ++i)
      uni13.push_back(inst_empty13.ext_points[i]);
    uni13.push_back(inst_full13.ext_points[2]);
    uni13.push_back(inst_full13.ext_points[3]);
    if (uni12.size() != 22 || uni13.size() != 22) {
      c.count(false, "criterion 3d: unexpected candidate universe size");
      return c;
    }

    TwoCenterSweep sweep12, sweep13;
    Rational thr12(BigInt(41), BigInt(4));
    sweep12.build(
        uni12, [](const PointD& a, const PointD& b) { return squared_distance(a, b); },
        [&](const Rational& d) { return d < thr12; });
    Ext39 thr13(q(16));
    sweep13.build(
        uni13, [](const Point39& a, const Point39& b) { return squared_distance39(a, b); },
        [&](const Ext39& d) { return d < thr13; });

    long long d_fail12 = 0, d_fail13 = 0, boundary = 0;
    for (std::uint32_t mask = 0; mask < (1u << 20); ++mask) {
      bool hyperclique = mask == 0xFFFFFu;
      std::uint32_t ex = existing_mask(mask);
      bool crosses_complete = true;
      for (std::size_t i = 0; i < combos.size(); ++i)
        if (z_index[i] >= 0 && !(mask >> i & 1)) crosses_complete = false;
      if (sweep12.decide(ex) != hyperclique) {
        ++d_fail12;
        if (crosses_complete && !hyperclique) ++boundary;
      }
      if (sweep13.decide(ex) != hyperclique) {
        ++d_fail13;
        if (crosses_complete && !hyperclique) ++boundary;
      }
      c.checks += 2;
    }
    if (d_fail12 + d_fail13 > 0) {
      c.failures += d_fail12 + d_fail13;
      std::ostringstream os;
      os << "criterion 3d exhaustive (1 vertex/part, 2^20 edge subsets): " << d_fail12
         << " two-center and " << d_fail13 << " kappa-center disagreements; " << boundary
         << " of " << (d_fail12 + d_fail13)
         << " are the documented all-cross-complete boundary family (see decisions ledger)";
      c.fail(os.str());
    }

    // validate the sweep model against the real generator + oracle pipeline
    SplitMix64 rng(0xC3D00);
    for (int t = 0; t < 300; ++t) {
      std::uint32_t mask = static_cast<std::uint32_t>(rng.below(1u << 20));
      if (t == 0) mask = 0xFFFFFu;
      if (t == 1) mask = 0;
      auto h = hyper_from_mask(combos, mask, 6);
      auto i12 = gen_hyperclique_d2c_r13(h);
      auto r12 = euclid_dkc_brute(i12.points, 2);
      c.count((r12.radius < thr12) == sweep12.decide(existing_mask(mask)),
              "criterion 3d sweep model mismatch (two-center) at mask " + std::to_string(mask));
      auto i13 = gen_hyperclique_dkc(h, 2);
      Ext39 r13 = dkc_brute_ring(i13.ext_points, 2);
      c.count((r13 < thr13) == sweep13.decide(existing_mask(mask)),
              "criterion 3d sweep model mismatch (kappa-center) at mask " + std::to_string(mask));
    }

    // random two-per-part instances through the full pipeline
    long long rand_fail = 0;
    for (int t = 0; t < 60; ++t) {
      SplitMix64 hrng(0xC3D40 + t);
      PartiteHypergraph3 h;
      for (int p = 0; p < 6; ++p) h.parts.push_back({q(2 * p + 1, 13), q(2 * p + 2, 13)});
      for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
          for (int k = j + 1; k < 6; ++k)
            for (int a = 0; a < 2; ++a)
              for (int b = 0; b < 2; ++b)
                for (int cc = 0; cc < 2; ++cc)
                  if (hrng.below(100) < 55) h.edges.push_back(HyperEdge{{{{i, a}, {j, b}, {k, cc}}}});
      auto i12 = gen_hyperclique_d2c_r13(h);
      auto rep12 = verify_reduction(ReductionKind::HypercliqueD2cR13, nullptr, &h, i12);
      auto i13 = gen_hyperclique_dkc(h, 2);
      auto rep13 = verify_reduction(ReductionKind::HypercliqueDkc, nullptr, &h, i13);
      c.checks += 2;
      if (!rep12.agree) ++rand_fail;
      if (!rep13.agree) ++rand_fail;
    }
    if (rand_fail) {
      c.failures += rand_fail;
      c.fail("criterion 3d random two-per-part disagreements: " + std::to_string(rand_fail));
    }
    std::cerr << "  [3d] done, failures so far " << c.failures << "\n";
  }

  // (e) maximum-coverage construction: exhaustive one-per-part sweep via the
  // closed-form pair counts (validated against the generator on samples),
  // plus random two-per-part instances
  {
    auto maxcov_decision_model = [&](std::uint32_t mask) {
      int cross_nonedges = 0;
      for (std::size_t i = 0; i < combos.size(); ++i)
        if (z_index[i] >= 0 && !(mask >> i & 1)) ++cross_nonedges;
      bool left = mask >> combo123 & 1, right = mask >> combo456 & 1;
      long long best = 0;
      if (left || right) best = 18;  // single orthant covers 9(n^2+n), n = 1
      if (left && right) best = std::max(best, 36LL - cross_nonedges);
      return best >= 36;
    };
    long long e_fail = 0;
    for (std::uint32_t mask = 0; mask < (1u << 20); ++mask) {
      bool hyperclique = mask == 0xFFFFFu;
      if (maxcov_decision_model(mask) != hyperclique) ++e_fail;
      ++c.checks;
    }
    if (e_fail) {
      c.failures += e_fail;
      c.fail("criterion 3e exhaustive one-per-part disagreements: " + std::to_string(e_fail));
    }
    SplitMix64 rng_e(0xC3E00);
    for (int t = 0; t < 200; ++t) {
      std::uint32_t mask = static_cast<std::uint32_t>(rng_e.below(1u << 20));
      if (t == 0) mask = 0xFFFFFu;
      auto h = hyper_from_mask(combos, mask, 6);
      auto inst = gen_maxcov2_r12(h);
      auto mc = brute_maxcov(inst.points, inst.ranges);
      c.count((Rational(mc.count) >= inst.threshold) == maxcov_decision_model(mask),
              "criterion 3e closed-form mismatch at mask " + std::to_string(mask));
    }
    long long e_rand_fail = 0, e_rand_sameside = 0;
    for (int t = 0; t < 60; ++t) {
      SplitMix64 hrng(0xC3E40 + t);
      PartiteHypergraph3 h;
      for (int p = 0; p < 6; ++p) h.parts.push_back({q(2 * p + 1, 13), q(2 * p + 2, 13)});
      for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
          for (int k = j + 1; k < 6; ++k)
            for (int a = 0; a < 2; ++a)
              for (int b = 0; b < 2; ++b)
                for (int cc = 0; cc < 2; ++cc)
                  if (hrng.below(100) < 45) h.edges.push_back(HyperEdge{{{{i, a}, {j, b}, {k, cc}}}});
      auto inst = gen_maxcov2_r12(h);
      auto rep = verify_reduction(ReductionKind::Maxcov2R12, nullptr, &h, inst);
      ++c.checks;
      if (!rep.agree) {
        ++e_rand_fail;
        auto edges = h.edge_set();
        auto has_disjoint_pair = [&](int p0) {
          for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
              for (int cc = 0; cc < 2; ++cc) {
                std::array<std::pair<int, int>, 3> e1{{{p0, a}, {p0 + 1, b}, {p0 + 2, cc}}};
                std::array<std::pair<int, int>, 3> e2{
                    {{p0, 1 - a}, {p0 + 1, 1 - b}, {p0 + 2, 1 - cc}}};
                if (edges.count(PartiteHypergraph3::key(e1)) &&
                    edges.count(PartiteHypergraph3::key(e2)))
                  return true;
              }
          return false;
        };
        if (has_disjoint_pair(0) || has_disjoint_pair(3)) ++e_rand_sameside;
      }
    }
    if (e_rand_fail) {
      c.failures += e_rand_fail;
      std::ostringstream os;
      os << "criterion 3e random two-per-part disagreements: " << e_rand_fail << " ("
         << e_rand_sameside
         << " explained by disjoint same-side orthant pairs reaching the threshold; see ledger)";
      c.fail(os.str());
    }
  }
  return c;
}

// ---------------------------------------------------------------- criterion 4
// Exact identities of the constructions.
Criterion criterion4() {
  Criterion c;
  for (int t = 0; t < 10; ++t) {
    SplitMix64 rng(0xC4000 + t);
    PartiteHypergraph3 h;
    for (int p = 0; p < 6; ++p) h.parts.push_back({q(2 * p + 1, 13), q(2 * p + 2, 13)});
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        for (int k = j + 1; k < 6; ++k)
          for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
              for (int cc = 0; cc < 2; ++cc)
                if (rng.below(100) < 70) h.edges.push_back(HyperEdge{{{{i, a}, {j, b}, {k, cc}}}});
    auto inst = gen_hyperclique_d2c_r13(h);
    PointD splus(std::vector<Rational>(13, q(0)));
    splus[12] = q(7, 2);
    for (const auto& p : inst.points) {
      if (p[12] == q(1))
        c.count(squared_distance(splus, p) == q(37, 4), "dist^2(s+, p-point) != 37/4");
      else if (p[12] == q(-1))
        c.count(squared_distance(splus, p) == q(93, 4), "dist^2(s+, q-point) != 93/4");
    }
  }
  Ext39 mu = ext39_mu(), nu = ext39_nu(), two(q(2));
  c.count(mu * mu + (nu - two) * (nu - two) == Ext39(q(8)), "mu^2 + (nu-2)^2 != 8");
  c.count((mu - two) * (mu - two) + nu * nu == Ext39(q(6)), "(mu-2)^2 + nu^2 != 6");

  for (int t = 0; t < 6; ++t) {
    SplitMix64 rng(0xC4100 + t);
    PartiteHypergraph3 h;
    int n = 2;
    for (int p = 0; p < 6; ++p) h.parts.push_back({q(2 * p + 1, 13), q(2 * p + 2, 13)});
    std::set<std::array<std::pair<int, int>, 3>> chosen;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        for (int k = j + 1; k < 6; ++k) {
          chosen.insert({{{i, 0}, {j, 0}, {k, 0}}});
          if (rng.below(2)) chosen.insert({{{i, 1}, {j, static_cast<int>(rng.below(2))}, {k, 1}}});
        }
    for (const auto& e : chosen) h.edges.push_back(HyperEdge{e});
    std::vector<MaxcovBlock> blocks;
    auto inst = gen_maxcov2_r12(h, &blocks);
    auto edges = h.edge_set();
    const ExtRect* left = nullptr;
    const ExtRect* right = nullptr;
    for (const auto& r : inst.ranges) {
      if (r.sides[0].hi.is_finite() && r.sides[0].hi.value() == h.parts[0][0] &&
          r.sides[2].hi.value() == h.parts[1][0] && r.sides[4].hi.value() == h.parts[2][0])
        left = &r;
      if (!r.sides[0].hi.is_finite() && r.sides[6].hi.value() == h.parts[3][0] &&
          r.sides[8].hi.value() == h.parts[4][0] && r.sides[10].hi.value() == h.parts[5][0])
        right = &r;
    }
    if (!left || !right) {
      c.count(false, "criterion 4: hyperclique orthants not found");
      continue;
    }
    for (const auto& blk : blocks) {
      long long covered = 0;
      for (std::size_t i = blk.begin; i < blk.end; ++i)
        if (point_in_rect(inst.points[i], *left) || point_in_rect(inst.points[i], *right))
          ++covered;
      std::array<std::pair<int, int>, 3> e{{{blk.i, 0}, {blk.j, 0}, {blk.k, 0}}};
      bool in_e = edges.count(PartiteHypergraph3::key(e)) > 0;
      long long expect = static_cast<long long>(n) * n + n - (in_e ? 0 : 1);
      c.count(covered == expect, "criterion 4: per-triple count off at triple (" +
                                     std::to_string(blk.i) + "," + std::to_string(blk.j) + "," +
                                     std::to_string(blk.k) + ")");
    }
  }
  return c;
}

// ---------------------------------------------------------------- criterion 5
// Structural bounds as data: guess counts, maximal-point counts, occupancy.
Criterion criterion5() {
  Criterion c;
  for (int t = 0; t < 40; ++t) {
    SplitMix64 rng(0xC5000 + t);
    int n = 8 + static_cast<int>(rng.below(120));
    auto inst = make_rect_instance(rng.next(), n, n, true, t % 2 == 1);
    SolveOptions opt;
    opt.threads = kThreads;
    Cover3Solver solver(inst.points, inst.rects, opt);
    SolveStats st;
    solver.solve(Variant::Basic, &st);
    long long bound = kGuessC;
    for (int i = 0; i < 8; ++i) bound *= st.g;
    c.count(st.step3_configs <= bound, "basic guess count " + std::to_string(st.step3_configs) +
                                           " exceeds c*g^8 at n=" + std::to_string(n));

    std::vector<ExtRect> unw = inst.rects;
    for (auto& r : unw) r.weight.reset();
    Cover3Solver solver2(inst.points, unw, opt);
    SolveStats st2;
    solver2.solve(Variant::Unweighted, &st2);
    long long bound5 = kGuessC;
    for (int i = 0; i < 5; ++i) bound5 *= st2.g;
    c.count(st2.step3_configs <= bound5,
            "unweighted guess count " + std::to_string(st2.step3_configs) + " exceeds c*g^5");
  }
  for (int t = 0; t < 200; ++t) {
    SplitMix64 rng(0xC5100 + t);
    int g = 2 + static_cast<int>(rng.below(63));
    std::vector<std::vector<int>> s;
    int k = 1 + static_cast<int>(rng.below(3u * g));
    for (int i = 0; i < k; ++i)
      s.push_back({1 + static_cast<int>(rng.below(g)), 1 + static_cast<int>(rng.below(g))});
    c.count(count_maximal_grid_points(s) <= 2 * g - 1,
            "maximal count exceeds 2g-1 at g=" + std::to_string(g));
  }
  for (int t = 0; t < 200; ++t) {
    SplitMix64 rng(0xC5200 + t);
    int m = 2 + static_cast<int>(rng.below(200));
    int g = 1 + static_cast<int>(rng.below(20));
    bool unit = rng.below(2);
    auto inst = unit ? make_unit_instance(rng.next(), 4, m, false, false)
                     : make_rect_instance(rng.next(), 4, m, false, false);
    auto bb = bounding_box(inst.points);
    auto ext = extend_rects(inst.rects, *bb);
    long long worst = 0;
    c.count(grid_occupancy_ok(ext, g, &worst),
            "occupancy " + std::to_string(worst) + " exceeds bound at m=" + std::to_string(m) +
                " g=" + std::to_string(g));
  }
  return c;
}

// ---------------------------------------------------------------- criterion 6
// Scaling smoke test for the unit-square unweighted solver.
Criterion criterion6() {
  Criterion c;
  std::vector<int> sizes{1 << 12, 1 << 13, 1 << 14, 1 << 15};
  std::vector<double> medians;
  for (int n : sizes) {
    std::vector<double> times;
    for (int run = 0; run < 5; ++run) {
      auto inst = make_unit_instance(0xC6000 + run, n, n, false, false);
      SolveOptions opt;
      opt.threads = kThreads;
      Cover3Solver solver(inst.points, inst.rects, opt);
      SolveStats st;
      solver.solve(Variant::UnitUnweighted, &st);
      times.push_back(st.wall_ms);
    }
    std::sort(times.begin(), times.end());
    medians.push_back(times[2]);
    std::cerr << "  [6] n=" << n << " median " << times[2] / 1000.0 << "s\n";
  }
  double limit = std::pow(2.0, 1.9);
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    double ratio = medians[i] / medians[i - 1];
    std::ostringstream os;
    os << "T(" << sizes[i] << ")/T(" << sizes[i - 1] << ") = " << ratio << " exceeds 2^1.9 = "
       << limit;
    c.count(ratio <= limit, os.str());
  }
  std::vector<int> bn{20, 26, 32};
  double coef = 0;
  for (int n : bn) {
    auto inst = make_unit_instance(0xC6F00 + n, n, n, false, false);
    auto t0 = Clock::now();
    brute_cover_k(inst.points, inst.rects, 3, false);
    double secs = seconds_since(t0);
    double work = static_cast<double>(n) * n * (n - 1) * (n - 2) / 6.0;
    coef = std::max(coef, secs / work);
  }
  double n15 = static_cast<double>(1 << 15);
  double brute_extrapolated = coef * n15 * (n15 - 1) * (n15 - 2) / 6.0 * n15;
  double fast = medians.back() / 1000.0;
  std::ostringstream os;
  os << "extrapolated brute " << brute_extrapolated << "s vs measured " << fast << "s (ratio "
     << brute_extrapolated / fast << ")";
  std::cerr << "  [6] " << os.str() << "\n";
  c.count(brute_extrapolated >= 100.0 * fast, "brute-force speedup below 100x: " + os.str());
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  auto want = [&](int k) { return selected.empty() || selected.count(k) > 0; };

  struct Row {
    int index;
    const char* what;
    Criterion (*fn)();
  };
  std::vector<Row> rows{
      {1, "cover solvers match brute force exactly (500 rectangle + 500 unit-square instances)",
       criterion1},
      {2, "discrete 3-center optimizer exact on 200 instances; decider monotone", criterion2},
      {3, "reduction equivalences at exhaustive tiny scale", criterion3},
      {4, "exact construction identities (37/4, 93/4, ring equations, per-triple counts)",
       criterion4},
      {5, "structural bounds: guess counts, maximal points, grid occupancy", criterion5},
      {6, "scaling smoke test for the unit-square unweighted solver", criterion6},
  };

  int failed = 0;
  for (const auto& row : rows) {
    if (!want(row.index)) continue;
    auto t0 = Clock::now();
    Criterion c = row.fn();
    double secs = seconds_since(t0);
    std::ostringstream line;
    line << "CRITERION " << row.index << " " << (c.pass ? "PASS" : "FAIL") << " - " << row.what
         << " [" << c.checks << " checks";
    if (c.failures) line << ", " << c.failures << " failures";
    line << ", " << static_cast<long long>(secs) << "s]";
    std::cout << line.str() << std::endl;
    for (const auto& note : c.notes) std::cout << "    - " << note << std::endl;
    if (!c.pass) ++failed;
  }
  return failed;
}
