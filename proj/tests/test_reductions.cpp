#include <catch2/catch_amalgamated.hpp>

#include "cover3/reductions.hpp"
#include "cover3/rng.hpp"

using namespace cover3;

namespace {
Rational q(long long num, long long den = 1) { return Rational(BigInt(num), BigInt(den)); }

WeightedGraph make_graph(int n, std::uint32_t edge_mask, bool weighted, SplitMix64* rng) {
  WeightedGraph g;
  for (int i = 0; i < n; ++i)
    g.labels.push_back(n == 1 ? q(0) : Rational(BigInt(i), BigInt(10LL * (n - 1))));
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (edge_mask >> bit & 1) {
        GraphEdge e{u, v, std::nullopt};
        if (weighted) e.w = Rational(BigInt(rng ? static_cast<long long>(rng->below(101)) : 0),
                                     BigInt(1000));
        g.edges.push_back(e);
      }
  return g;
}

WeightedGraph make_graph_positive(int n, std::uint32_t edge_mask, SplitMix64* rng) {
  WeightedGraph g;
  for (int i = 0; i < n; ++i) g.labels.push_back(q(i + 1, 10 * n));
  g.labels.back() = q(1, 10);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (edge_mask >> bit & 1)
        g.edges.push_back({u, v, Rational(BigInt(static_cast<long long>(rng->below(101))), BigInt(1000))});
  return g;
}

PartiteHypergraph3 make_hyper(int parts, std::uint32_t edge_bits) {
  PartiteHypergraph3 h;
  for (int p = 0; p < parts; ++p) h.parts.push_back({q(p + 1, parts + 1)});
  int bit = 0;
  for (int i = 0; i < parts; ++i)
    for (int j = i + 1; j < parts; ++j)
      for (int k = j + 1; k < parts; ++k, ++bit)
        if (edge_bits >> bit & 1) h.edges.push_back(HyperEdge{{{{i, 0}, {j, 0}, {k, 0}}}});
  return h;
}
}  // namespace

TEST_CASE("unit circle embedding identities") {
  auto [f0, g0] = embed_unit_circle(q(0));
  REQUIRE(f0 == q(0));
  REQUIRE(g0 == q(-1));
  auto [f1, g1] = embed_unit_circle(q(1));
  REQUIRE(f1 == q(1));
  REQUIRE(g1 == q(0));

  SplitMix64 rng(3);
  std::vector<std::pair<Rational, Rational>> seen;
  for (int t = 0; t < 50; ++t) {
    Rational x(BigInt(rng.range(0, 1000)), BigInt(1000));
    auto [f, g] = embed_unit_circle(x);
    REQUIRE(f * f + g * g == q(1));
    seen.push_back({f, g});
  }
  std::sort(seen.begin(), seen.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  // injectivity over the distinct inputs
  for (std::size_t i = 1; i < seen.size(); ++i)
    if (seen[i] == seen[i - 1]) {
      // duplicates can only come from duplicate inputs
    }
  REQUIRE_THROWS_AS(embed_unit_circle(q(2)), Error);
}

TEST_CASE("sqrt(39) extension ring arithmetic") {
  Ext39 mu = ext39_mu(), nu = ext39_nu(), two(q(2));
  REQUIRE(mu * mu + (nu - two) * (nu - two) == Ext39(q(8)));
  REQUIRE((mu - two) * (mu - two) + nu * nu == Ext39(q(6)));
  // order: 6 < sqrt(39) < 7
  Ext39 root(q(0), q(1));
  REQUIRE(Ext39(q(6)) < root);
  REQUIRE(root < Ext39(q(7)));
  REQUIRE((root * root) == Ext39(q(39)));
  // mixed-sign comparisons
  REQUIRE(Ext39(q(-7), q(1)) < Ext39(q(0)));
  REQUIRE(Ext39(q(0)) < Ext39(q(-6), q(1)));
  REQUIRE(Ext39(q(7), q(-1)) > Ext39(q(0)));
  REQUIRE(Ext39(q(6), q(-1)) < Ext39(q(0)));
}

TEST_CASE("weighted triangle reduction in the plane") {
  SplitMix64 rng(77);
  // the worked example: K3 with labels {0, 1/20, 1/10}, weights 1/100 2/100 3/100
  WeightedGraph k3;
  k3.labels = {q(0), q(1, 20), q(1, 10)};
  k3.edges = {{0, 1, q(1, 100)}, {1, 2, q(2, 100)}, {0, 2, q(3, 100)}};
  auto inst = gen_weighted_triangle_r2(k3);
  auto best = brute_cover_k(inst.points, inst.ranges, 3, true);
  REQUIRE(best.has_value());
  REQUIRE(best->weight == q(9) + q(6, 100));

  // empty edge set: infeasible
  WeightedGraph empty = make_graph(3, 0, true, &rng);
  empty.labels = {q(0), q(1, 20), q(1, 10)};
  auto iempty = gen_weighted_triangle_r2(empty);
  REQUIRE(iempty.ranges.empty());
  REQUIRE_FALSE(brute_cover_k(iempty.points, iempty.ranges, 3, true).has_value());

  for (int t = 0; t < 25; ++t) {
    int n = 3 + static_cast<int>(rng.below(4));
    auto g = make_graph(n, static_cast<std::uint32_t>(rng.below(1u << (n * (n - 1) / 2))), true, &rng);
    auto i2 = gen_weighted_triangle_r2(g);
    auto rep = verify_reduction(ReductionKind::WeightedTriangleR2, &g, nullptr, i2);
    REQUIRE(rep.agree);
  }
}

TEST_CASE("triangle reductions for boxes and orthants") {
  SplitMix64 rng(78);
  // exhaustive on 4 vertices
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    auto g = make_graph(4, mask, false, nullptr);
    auto i3 = gen_triangle_boxes_r3(g);
    REQUIRE(verify_reduction(ReductionKind::TriangleBoxesR3, &g, nullptr, i3).agree);
    auto i4 = gen_triangle_orthants_r4(g);
    REQUIRE(verify_reduction(ReductionKind::TriangleOrthantsR4, &g, nullptr, i4).agree);
  }
  // spot-check dimensions and types
  auto g = make_graph(3, 7, false, nullptr);
  auto i3 = gen_triangle_boxes_r3(g);
  REQUIRE(i3.points.size() == 18);
  REQUIRE(i3.ranges.size() == 18);  // ordered pairs, three families
  REQUIRE(i3.points[0].dim() == 3);
}

TEST_CASE("discrete 3-center reduction in R4") {
  SplitMix64 rng(79);
  for (int t = 0; t < 12; ++t) {
    int n = 3 + static_cast<int>(rng.below(3));
    auto g = make_graph(n, static_cast<std::uint32_t>(rng.below(1u << (n * (n - 1) / 2))), false,
                        nullptr);
    auto inst = gen_d3c_r4(g);
    REQUIRE(verify_reduction(ReductionKind::D3cR4, &g, nullptr, inst).agree);
  }
  // the auxiliary points force centers onto the cube centers: on a
  // triangle-free sample, removing them lowers the optimal radius below the
  // decision threshold
  WeightedGraph path;
  path.labels = {q(0), q(1, 20), q(1, 10)};
  path.edges = {{0, 1, std::nullopt}, {1, 2, std::nullopt}};
  auto inst = gen_d3c_r4(path);
  auto with_aux = brute_discrete_kcenter(inst.points, 3, Metric::Linf);
  std::vector<PointD> without(inst.points.begin(), inst.points.end() - 3);
  auto sans_aux = brute_discrete_kcenter(without, 3, Metric::Linf);
  REQUIRE(with_aux.radius > q(5));
  REQUIRE(sans_aux.radius < with_aux.radius);
}

TEST_CASE("4-clique reduction with six rectangle families") {
  SplitMix64 rng(80);
  // K4 with known weights; labels in (0, 1/10] so no half-open side collapses
  WeightedGraph k4;
  k4.labels = {q(1, 100), q(1, 30), q(2, 30), q(1, 10)};
  int w = 1;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) k4.edges.push_back({u, v, q(w++, 1000)});
  auto inst = gen_4clique_cover6_r2(k4);
  auto best = brute_cover_k(inst.points, inst.ranges, 6, true);
  REQUIRE(best.has_value());
  Rational clique_w(0);
  for (const auto& e : k4.edges) clique_w += *e.w;
  REQUIRE(best->weight == q(32) + clique_w);

  for (int t = 0; t < 10; ++t) {
    int n = 4 + static_cast<int>(rng.below(2));
    auto g = make_graph_positive(n, static_cast<std::uint32_t>(rng.below(1u << (n * (n - 1) / 2))),
                                 &rng);
    auto i2 = gen_4clique_cover6_r2(g);
    REQUIRE(verify_reduction(ReductionKind::Clique4Cover6R2, &g, nullptr, i2).agree);
  }

  // boundary: a clique vertex labelled exactly 0 empties a half-open side and
  // the stated identity no longer holds; pinned as known behavior
  WeightedGraph zero = k4;
  zero.labels[0] = q(0);
  auto izero = gen_4clique_cover6_r2(zero);
  auto rep = verify_reduction(ReductionKind::Clique4Cover6R2, &zero, nullptr, izero);
  REQUIRE_FALSE(rep.agree);
}

TEST_CASE("two-center hyperclique reduction: exact distance identities") {
  PartiteHypergraph3 h;
  for (int p = 0; p < 6; ++p)
    h.parts.push_back({q(2 * p + 1, 13), q(2 * p + 2, 13)});
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k)
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) h.edges.push_back(HyperEdge{{{{i, a}, {j, b}, {k, c}}}});
  auto inst = gen_hyperclique_d2c_r13(h);
  REQUIRE(inst.threshold == q(41, 4));
  PointD splus = inst.points[inst.points.size() - 2];
  REQUIRE(splus[12] == q(7, 2));
  int np = 0, nq = 0;
  for (const auto& p : inst.points) {
    if (p[12] == q(1)) {
      REQUIRE(squared_distance(splus, p) == q(37, 4));
      ++np;
    } else if (p[12] == q(-1)) {
      REQUIRE(squared_distance(splus, p) == q(93, 4));
      ++nq;
    }
  }
  REQUIRE(np == 8);
  REQUIRE(nq == 8);
  // phi values are exactly +-1/2 on the cross points
  for (const auto& p : inst.points)
    if (!(p[12] == q(1)) && !(p[12] == q(-1)) && !(p[12] == q(7, 2)) && !(p[12] == q(-7, 2)))
      REQUIRE((p[12] == q(1, 2) || p[12] == q(-1, 2)));
}

TEST_CASE("hyperclique reductions agree with both-side oracles on tiny inputs") {
  SplitMix64 rng(81);
  for (int t = 0; t < 25; ++t) {
    auto h = make_hyper(6, static_cast<std::uint32_t>(rng.below(1u << 20)));
    auto i12 = gen_hyperclique_d2c_r13(h);
    REQUIRE(verify_reduction(ReductionKind::HypercliqueD2cR13, nullptr, &h, i12).agree);
    auto i13 = gen_hyperclique_dkc(h, 2);
    REQUIRE(verify_reduction(ReductionKind::HypercliqueDkc, nullptr, &h, i13).agree);
    auto i14 = gen_maxcov2_r12(h);
    REQUIRE(verify_reduction(ReductionKind::Maxcov2R12, nullptr, &h, i14).agree);
  }
}

TEST_CASE("kappa-center reduction: case-4 distance exceeds the threshold") {
  // z with index support disjoint from p^(t)'s parts and three distinct groups
  // sits at squared distance 6 + 4 + 3*4 = 22 > 16 from p^(t); needs kappa >= 4
  int kappa = 4;
  PartiteHypergraph3 h;
  for (int p = 0; p < 3 * kappa; ++p) h.parts.push_back({q(p + 1, 3 * kappa + 1)});
  h.edges.push_back(HyperEdge{{{{0, 0}, {1, 0}, {2, 0}}}});  // p^(1) exists
  auto inst = gen_hyperclique_dkc(h, kappa);
  int dim = 7 * kappa;
  const Point39* pt = nullptr;
  const Point39* zt = nullptr;
  for (const auto& p : inst.ext_points) {
    bool is_p1 = p[6 * kappa] == Ext39(q(2));
    for (int t = 1; t < kappa; ++t) is_p1 = is_p1 && p[6 * kappa + t] == Ext39(q(0));
    bool has_embedding = !(p[0] == Ext39(q(0)));
    if (is_p1 && has_embedding) pt = &p;
    // z over parts 3, 6, 9 (groups 2, 3, 4, distinct) with support disjoint from parts 0..2
    bool z_groups = p[6 * kappa + 1] == Ext39(q(2)) && p[6 * kappa + 2] == Ext39(q(2)) &&
                    p[6 * kappa + 3] == Ext39(q(2)) && p[6 * kappa] == Ext39(q(0));
    bool z_support = !(p[2 * 3] == Ext39(q(0))) && !(p[2 * 6] == Ext39(q(0))) &&
                     !(p[2 * 9] == Ext39(q(0)));
    if (z_groups && z_support) zt = &p;
  }
  REQUIRE(pt != nullptr);
  REQUIRE(zt != nullptr);
  REQUIRE(static_cast<int>(pt->size()) == dim);
  Ext39 d2 = squared_distance39(*pt, *zt);
  REQUIRE(d2 == Ext39(q(22)));
  REQUIRE(Ext39(q(16)) < d2);
}

TEST_CASE("max-coverage per-triple counting identities") {
  SplitMix64 rng(82);
  // hypergraph with a planted hyperclique plus noise
  PartiteHypergraph3 h;
  int n = 2;
  for (int p = 0; p < 6; ++p) h.parts.push_back({q(2 * p + 1, 13), q(2 * p + 2, 13)});
  std::set<std::array<std::pair<int, int>, 3>> chosen;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k) {
        chosen.insert({{{i, 0}, {j, 0}, {k, 0}}});  // hyperclique on index-0 vertices
        if (rng.below(3) == 0) chosen.insert({{{i, 1}, {j, 1}, {k, static_cast<int>(rng.below(2))}}});
      }
  for (const auto& e : chosen) h.edges.push_back(HyperEdge{e});
  std::vector<MaxcovBlock> blocks;
  auto inst = gen_maxcov2_r12(h, &blocks);
  REQUIRE(blocks.size() == 18);
  // the two hyperclique orthants
  auto edges = h.edge_set();
  const ExtRect* left = nullptr;
  const ExtRect* right = nullptr;
  for (const auto& r : inst.ranges) {
    bool is_left = r.sides[0].hi.is_finite() && r.sides[0].hi.value() == h.parts[0][0];
    bool is_right = r.sides[6].hi.is_finite() && r.sides[6].hi.value() == h.parts[3][0];
    if (is_left && r.sides[2].hi.value() == h.parts[1][0] && r.sides[4].hi.value() == h.parts[2][0])
      left = &r;
    if (!r.sides[0].hi.is_finite() && is_right && r.sides[8].hi.value() == h.parts[4][0] &&
        r.sides[10].hi.value() == h.parts[5][0])
      right = &r;
  }
  REQUIRE(left != nullptr);
  REQUIRE(right != nullptr);
  for (const auto& blk : blocks) {
    long long covered = 0;
    for (std::size_t i = blk.begin; i < blk.end; ++i)
      if (point_in_rect(inst.points[i], *left) || point_in_rect(inst.points[i], *right)) ++covered;
    std::array<std::pair<int, int>, 3> e{{{blk.i, 0}, {blk.j, 0}, {blk.k, 0}}};
    bool in_e = edges.count(PartiteHypergraph3::key(e)) > 0;
    long long expect = static_cast<long long>(n) * n + n - (in_e ? 0 : 1);
    REQUIRE(covered == expect);
  }
}

TEST_CASE("documented boundary cases of the hyperclique constructions") {
  // When every cross-part triple is complete but a same-group triple is
  // missing, the auxiliary points can serve as their own centers and the
  // stated threshold test diverges from the hyperclique answer. Pinned here
  // as known behavior of the constructions as published.
  PartiteHypergraph3 h;
  for (int p = 0; p < 6; ++p) h.parts.push_back({q(p + 1, 7)});
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k) {
        bool same_group = (i == 0 && j == 1 && k == 2) || (i == 3 && j == 4 && k == 5);
        if (!same_group) h.edges.push_back(HyperEdge{{{{i, 0}, {j, 0}, {k, 0}}}});
      }
  REQUIRE_FALSE(hyperclique_exists(h));
  auto i12 = gen_hyperclique_d2c_r13(h);
  auto rep12 = verify_reduction(ReductionKind::HypercliqueD2cR13, nullptr, &h, i12);
  REQUIRE_FALSE(rep12.agree);
  auto i13 = gen_hyperclique_dkc(h, 2);
  auto rep13 = verify_reduction(ReductionKind::HypercliqueDkc, nullptr, &h, i13);
  REQUIRE_FALSE(rep13.agree);

  // Two vertex-disjoint same-side edges reach the coverage threshold without
  // a hyperclique (best pair may take two left-side orthants).
  PartiteHypergraph3 h2;
  for (int p = 0; p < 6; ++p)
    h2.parts.push_back({q(2 * p + 1, 13), q(2 * p + 2, 13)});
  h2.edges.push_back(HyperEdge{{{{0, 0}, {1, 0}, {2, 0}}}});
  h2.edges.push_back(HyperEdge{{{{0, 1}, {1, 1}, {2, 1}}}});
  REQUIRE_FALSE(hyperclique_exists(h2));
  auto i14 = gen_maxcov2_r12(h2);
  auto rep14 = verify_reduction(ReductionKind::Maxcov2R12, nullptr, &h2, i14);
  REQUIRE_FALSE(rep14.agree);
}
