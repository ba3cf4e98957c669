// Exact generators for the hardness constructions (triangle / 4-clique /
// hyperclique sources to geometric cover, center, and coverage instances) and
// verifiers that check each claimed equivalence against both-side oracles.
#pragma once

#include <array>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cover3/geometry.hpp"
#include "cover3/graphs.hpp"
#include "cover3/kcenter.hpp"
#include "cover3/oracles.hpp"

namespace cover3 {

enum class ReductionKind {
  WeightedTriangleR2,
  TriangleBoxesR3,
  TriangleOrthantsR4,
  D3cR4,
  Clique4Cover6R2,
  HypercliqueD2cR13,
  HypercliqueDkc,
  Maxcov2R12,
};

inline const char* to_string(ReductionKind k) {
  switch (k) {
    case ReductionKind::WeightedTriangleR2: return "weighted_triangle_r2";
    case ReductionKind::TriangleBoxesR3: return "triangle_boxes_r3";
    case ReductionKind::TriangleOrthantsR4: return "triangle_orthants_r4";
    case ReductionKind::D3cR4: return "d3c_r4";
    case ReductionKind::Clique4Cover6R2: return "clique4_cover6_r2";
    case ReductionKind::HypercliqueD2cR13: return "d2c_r13";
    case ReductionKind::HypercliqueDkc: return "dkc_r7k";
    case ReductionKind::Maxcov2R12: return "maxcov2_r12";
  }
  return "?";
}

inline std::optional<ReductionKind> reduction_kind_from(const std::string& s) {
  for (ReductionKind k :
       {ReductionKind::WeightedTriangleR2, ReductionKind::TriangleBoxesR3,
        ReductionKind::TriangleOrthantsR4, ReductionKind::D3cR4, ReductionKind::Clique4Cover6R2,
        ReductionKind::HypercliqueD2cR13, ReductionKind::HypercliqueDkc, ReductionKind::Maxcov2R12})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

// Element of Q[sqrt(39)]: a + b*sqrt(39), exact.
struct Ext39 {
  Rational a, b;

  Ext39() : a(0), b(0) {}
  Ext39(Rational ra) : a(std::move(ra)), b(0) {}  // NOLINT
  Ext39(Rational ra, Rational rb) : a(std::move(ra)), b(std::move(rb)) {}

  friend Ext39 operator+(const Ext39& x, const Ext39& y) { return {x.a + y.a, x.b + y.b}; }
  friend Ext39 operator-(const Ext39& x, const Ext39& y) { return {x.a - y.a, x.b - y.b}; }
  friend Ext39 operator*(const Ext39& x, const Ext39& y) {
    return {x.a * y.a + Rational(39) * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend bool operator==(const Ext39& x, const Ext39& y) { return x.a == y.a && x.b == y.b; }

  int sign() const {
    int sa = a.sign(), sb = b.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: the term with the larger square dominates
    Rational lhs = a * a;
    Rational rhs = Rational(39) * b * b;
    auto c = lhs <=> rhs;
    if (c == 0) return 0;  // cannot happen for b != 0 since sqrt(39) is irrational
    return c > 0 ? sa : sb;
  }

  friend std::strong_ordering operator<=>(const Ext39& x, const Ext39& y) {
    int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
};

inline Ext39 ext39_mu() { return Ext39(Rational(BigInt(5), BigInt(4)), Rational(BigInt(1), BigInt(4))); }
inline Ext39 ext39_nu() { return Ext39(Rational(BigInt(3), BigInt(4)), Rational(BigInt(1), BigInt(4))); }

using Point39 = std::vector<Ext39>;

inline Ext39 squared_distance39(const Point39& x, const Point39& y) {
  Ext39 s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Ext39 d = x[i] - y[i];
    s = s + d * d;
  }
  return s;
}

// f(x) = 2x/(x^2+1), g(x) = (x^2-1)/(x^2+1): injective on [0,1], f^2+g^2 = 1.
inline std::pair<Rational, Rational> embed_unit_circle(const Rational& x) {
  if (x < Rational(0) || x > Rational(1))
    throw Error(Error::Code::InvalidArgument, "embed_unit_circle expects x in [0,1]");
  Rational den = x * x + Rational(1);
  return {Rational(2) * x / den, (x * x - Rational(1)) / den};
}

struct ReductionInstance {
  ReductionKind kind;
  std::vector<PointD> points;
  std::vector<ExtRect> ranges;
  Rational threshold;  // squared radius, weight, or count, per kind
  int kappa = 0;
  std::vector<Point39> ext_points;  // only for the sqrt(39) construction
};

namespace detail {

inline Rational frac(long long num, long long den = 1) { return Rational(BigInt(num), BigInt(den)); }

inline Interval iv(ExtScalar lo, bool lo_closed, ExtScalar hi, bool hi_closed) {
  return Interval(std::move(lo), std::move(hi), lo_closed, hi_closed);
}
inline ExtScalar ninf() { return ExtScalar::neg_inf(); }
inline ExtScalar pinf() { return ExtScalar::pos_inf(); }

// ordered adjacent pairs (a, b) of a graph, with the edge weight
template <typename Fn>
void for_ordered_edges(const WeightedGraph& g, Fn&& fn) {
  for (const auto& e : g.edges) {
    Rational w = e.w.value_or(Rational(0));
    fn(e.u, e.v, w);
    fn(e.v, e.u, w);
  }
}

inline void assign_cover_weights(std::vector<ExtRect>& rects, const std::vector<PointD>& pts,
                                 const std::vector<Rational>& edge_weights) {
  for (std::size_t j = 0; j < rects.size(); ++j) {
    long long covered = 0;
    for (const auto& p : pts)
      if (rects[j].contains(p)) ++covered;
    rects[j].weight = Rational(covered) + edge_weights[j];
  }
}

}  // namespace detail

// Minimum-weight-triangle source: 3n points and weighted orthants in the
// plane; optimal weighted 3-cover weight equals 3n plus the triangle weight.
inline ReductionInstance gen_weighted_triangle_r2(const WeightedGraph& g) {
  g.validate_labels(true, true);
  ReductionInstance inst;
  inst.kind = ReductionKind::WeightedTriangleR2;
  const auto& L = g.labels;
  for (const auto& t : L) {
    inst.points.push_back(PointD(t, Rational(1) + t));            // type 1
    inst.points.push_back(PointD(Rational(2), t));                // type 2
    inst.points.push_back(PointD(Rational(1) + t, Rational(-1)));  // type 3
  }
  std::vector<Rational> ew;
  int id = 0;
  detail::for_ordered_edges(g, [&](int a, int b, const Rational& w) {
    const Rational &x1 = L[a], &x2p = L[b];
    inst.ranges.push_back(ExtRect(
        {detail::iv(detail::ninf(), false, ExtScalar(Rational(1) + x2p), false),
         detail::iv(detail::ninf(), false, ExtScalar(Rational(1) + x1), true)},
        std::nullopt, id++));
    ew.push_back(w);
    const Rational &x2 = L[a], &x3p = L[b];
    inst.ranges.push_back(ExtRect({detail::iv(ExtScalar(Rational(1) + x2), true, detail::pinf(), false),
                                   detail::iv(detail::ninf(), false, ExtScalar(x3p), false)},
                                  std::nullopt, id++));
    ew.push_back(w);
    const Rational &x3 = L[a], &x1p = L[b];
    inst.ranges.push_back(ExtRect({detail::iv(ExtScalar(x1p), false, detail::pinf(), false),
                                   detail::iv(ExtScalar(x3), true, detail::pinf(), false)},
                                  std::nullopt, id++));
    ew.push_back(w);
  });
  detail::assign_cover_weights(inst.ranges, inst.points, ew);
  inst.threshold = Rational(3 * g.n());  // optimum = threshold + min triangle weight
  return inst;
}

// Triangle source: 6n points and boxes in R^3; a 3-cover exists iff a triangle does.
inline ReductionInstance gen_triangle_boxes_r3(const WeightedGraph& g) {
  g.validate_labels(true, true);
  ReductionInstance inst;
  inst.kind = ReductionKind::TriangleBoxesR3;
  const auto& L = g.labels;
  auto R = [](long long v) { return Rational(v); };
  for (const auto& t : L) {
    inst.points.push_back(PointD({R(-1) + t, R(0), R(2) + t}));
    inst.points.push_back(PointD({R(1) + t, R(0), R(-2) + t}));
    inst.points.push_back(PointD({R(2) + t, R(-1) + t, R(0)}));
    inst.points.push_back(PointD({R(-2) + t, R(1) + t, R(0)}));
    inst.points.push_back(PointD({R(0), R(2) + t, R(-1) + t}));
    inst.points.push_back(PointD({R(0), R(-2) + t, R(1) + t}));
  }
  int id = 0;
  detail::for_ordered_edges(g, [&](int a, int b, const Rational&) {
    const Rational &u = L[a], &v = L[b];
    inst.ranges.push_back(ExtRect({detail::iv(ExtScalar(R(-1) + u), false, ExtScalar(R(1) + u), false),
                                   detail::iv(ExtScalar(R(-2) + v), true, ExtScalar(R(2) + v), true),
                                   Interval::all()},
                                  std::nullopt, id++));
    inst.ranges.push_back(ExtRect({detail::iv(ExtScalar(R(-2) + v), true, ExtScalar(R(2) + v), true),
                                   Interval::all(),
                                   detail::iv(ExtScalar(R(-1) + u), false, ExtScalar(R(1) + u), false)},
                                  std::nullopt, id++));
    inst.ranges.push_back(ExtRect({Interval::all(),
                                   detail::iv(ExtScalar(R(-1) + u), false, ExtScalar(R(1) + u), false),
                                   detail::iv(ExtScalar(R(-2) + v), true, ExtScalar(R(2) + v), true)},
                                  std::nullopt, id++));
  });
  inst.threshold = Rational(3);
  return inst;
}

// Triangle source in R^4 with orthants (the computer-found construction).
inline ReductionInstance gen_triangle_orthants_r4(const WeightedGraph& g) {
  g.validate_labels(true, true);
  ReductionInstance inst;
  inst.kind = ReductionKind::TriangleOrthantsR4;
  const auto& L = g.labels;
  Rational half(BigInt(1), BigInt(2));
  auto R = [](long long v) { return Rational(v); };
  for (const auto& t : L) {
    inst.points.push_back(PointD({t, R(2) + t, -half, -half}));
    inst.points.push_back(PointD({R(2) - t, -t, -half, -half}));
    inst.points.push_back(PointD({R(1) - t, half, R(1) + t, R(3) * half}));
    inst.points.push_back(PointD({half, R(1) + t, half, R(2) - t}));
    inst.points.push_back(PointD({-half, -half, R(2) - t, -t}));
    inst.points.push_back(PointD({-half, -half, t, R(1) + t}));
  }
  int id = 0;
  detail::for_ordered_edges(g, [&](int a, int b, const Rational&) {
    const Rational &u = L[a], &v = L[b];
    // type 1: x1 x2'
    inst.ranges.push_back(ExtRect({detail::iv(ExtScalar(u), true, detail::pinf(), false),
                                   detail::iv(ExtScalar(-u), true, detail::pinf(), false),
                                   detail::iv(detail::ninf(), false, ExtScalar(R(1) + v), false),
                                   detail::iv(detail::ninf(), false, ExtScalar(R(2) - v), false)},
                                  std::nullopt, id++));
    // type 2: x2 x3'
    inst.ranges.push_back(ExtRect({detail::iv(detail::ninf(), false, ExtScalar(R(1) - u), true),
                                   detail::iv(detail::ninf(), false, ExtScalar(R(1) + u), true),
                                   detail::iv(ExtScalar(v), false, detail::pinf(), false),
                                   detail::iv(ExtScalar(-v), false, detail::pinf(), false)},
                                  std::nullopt, id++));
    // type 3: x3 x1'
    inst.ranges.push_back(ExtRect({detail::iv(detail::ninf(), false, ExtScalar(R(2) - v), false),
                                   detail::iv(detail::ninf(), false, ExtScalar(R(2) + v), false),
                                   detail::iv(detail::ninf(), false, ExtScalar(R(2) - u), true),
                                   detail::iv(detail::ninf(), false, ExtScalar(R(1) + u), true)},
                                  std::nullopt, id++));
  });
  inst.threshold = Rational(3);
  return inst;
}

// Rectilinear discrete 3-center in R^4: orthants become side-10 hypercubes
// (corner kept), the point set gains the cube centers and three auxiliary
// points; radius at most 5 iff a triangle exists. A closed cube cannot express
// an open orthant side, so centers shift inward by half the minimum positive
// coordinate gap on open-derived dimensions.
inline ReductionInstance gen_d3c_r4(const WeightedGraph& g) {
  ReductionInstance base = gen_triangle_orthants_r4(g);
  ReductionInstance inst;
  inst.kind = ReductionKind::D3cR4;
  inst.points = base.points;
  Rational five(5);

  std::vector<Rational> values;
  for (const auto& p : base.points)
    for (const auto& c : p.coords) values.push_back(c);
  for (const auto& orth : base.ranges)
    for (const auto& s : orth.sides) {
      if (s.lo.is_finite()) values.push_back(s.lo.value());
      if (s.hi.is_finite()) values.push_back(s.hi.value());
    }
  std::sort(values.begin(), values.end());
  Rational delta(1);
  for (std::size_t i = 1; i < values.size(); ++i) {
    Rational d = values[i] - values[i - 1];
    if (d > Rational(0) && d < delta) delta = d;
  }
  Rational eps = delta / Rational(2);

  for (const auto& orth : base.ranges) {
    PointD center(std::vector<Rational>(4, Rational(0)));
    for (int d = 0; d < 4; ++d) {
      const Interval& s = orth.sides[d];
      if (s.lo.is_finite()) {
        center[d] = s.lo.value() + five;  // cube grows upward from the corner
        if (!s.lo_closed) center[d] += eps;
      } else if (s.hi.is_finite()) {
        center[d] = s.hi.value() - five;
        if (!s.hi_closed) center[d] -= eps;
      } else {
        throw Error(Error::Code::InvalidArgument, "orthant with no finite side");
      }
    }
    inst.points.push_back(center);
  }
  Rational h(BigInt(19), BigInt(2)), e(BigInt(17), BigInt(2)), f(BigInt(15), BigInt(2));
  inst.points.push_back(PointD({h, h, -e, -f}));
  inst.points.push_back(PointD({-e, -e, h, h}));
  inst.points.push_back(PointD({-f, -f, -f, -e}));
  inst.threshold = five;  // L-inf radius
  return inst;
}

// Minimum-weight-4-clique source: 8n points, six weighted rectangle families;
// optimal weighted size-6 cover weight equals 8n plus the clique weight.
// A clique vertex labelled exactly 0 empties one of the half-open rectangle
// sides, so callers should rescale labels into (0, 1/10]; only the 1/10
// anchor is required by the forcing points.
inline ReductionInstance gen_4clique_cover6_r2(const WeightedGraph& g) {
  g.validate_labels(false, true);
  ReductionInstance inst;
  inst.kind = ReductionKind::Clique4Cover6R2;
  const auto& L = g.labels;
  auto R = [](long long v) { return Rational(v); };
  Rational tenth(BigInt(1), BigInt(10));
  for (const auto& t : L) {
    inst.points.push_back(PointD(R(0), R(2) - t));      // type 1
    inst.points.push_back(PointD(t, R(0)));             // type 2
    inst.points.push_back(PointD(R(2), t));             // type 3
    inst.points.push_back(PointD(R(2) - t, R(2)));      // type 4
    inst.points.push_back(PointD(R(1), t));             // type 5
    inst.points.push_back(PointD(R(1), R(2) - t));      // type 6
    inst.points.push_back(PointD(t, R(1)));             // type 7
    inst.points.push_back(PointD(R(2) - t, R(1)));      // type 8
  }
  std::vector<Rational> ew;
  int id = 0;
  detail::for_ordered_edges(g, [&](int a, int b, const Rational& w) {
    const Rational &u = L[a], &v = L[b];
    // type 1: [0, x2') x [0, 2 - x1]
    inst.ranges.push_back(ExtRect({detail::iv(ExtScalar(R(0)), true, ExtScalar(v), false),
                                   detail::iv(ExtScalar(R(0)), true, ExtScalar(R(2) - u), true)},
                                  std::nullopt, id++));
    ew.push_back(w);
    // type 2: [x2, 2] x [0, x3')
    inst.ranges.push_back(ExtRect({detail::iv(ExtScalar(u), true, ExtScalar(R(2)), true),
                                   detail::iv(ExtScalar(R(0)), true, ExtScalar(v), false)},
                                  std::nullopt, id++));
    ew.push_back(w);
    // type 3: (2 - x4', 2] x [x3, 2]
    inst.ranges.push_back(ExtRect({detail::iv(ExtScalar(R(2) - v), false, ExtScalar(R(2)), true),
                                   detail::iv(ExtScalar(u), true, ExtScalar(R(2)), true)},
                                  std::nullopt, id++));
    ew.push_back(w);
    // type 4: [0, 2 - x4] x (2 - x1', 2]
    inst.ranges.push_back(ExtRect({detail::iv(ExtScalar(R(0)), true, ExtScalar(R(2) - u), true),
                                   detail::iv(ExtScalar(R(2) - v), false, ExtScalar(R(2)), true)},
                                  std::nullopt, id++));
    ew.push_back(w);
    // type 5: [1, 1.1] x [x3'', 2 - x1'']
    inst.ranges.push_back(ExtRect({detail::iv(ExtScalar(R(1)), true, ExtScalar(R(1) + tenth), true),
                                   detail::iv(ExtScalar(v), true, ExtScalar(R(2) - u), true)},
                                  std::nullopt, id++));
    ew.push_back(w);
    // type 6: [x2'', 2 - x4''] x [1, 1.1]
    inst.ranges.push_back(ExtRect({detail::iv(ExtScalar(u), true, ExtScalar(R(2) - v), true),
                                   detail::iv(ExtScalar(R(1)), true, ExtScalar(R(1) + tenth), true)},
                                  std::nullopt, id++));
    ew.push_back(w);
  });
  detail::assign_cover_weights(inst.ranges, inst.points, ew);
  inst.threshold = Rational(8 * g.n());
  return inst;
}

// 6-hyperclique source: points in R^13; the discrete 2-center squared radius
// is strictly below 41/4 iff a hyperclique exists.
inline ReductionInstance gen_hyperclique_d2c_r13(const PartiteHypergraph3& h) {
  h.validate();
  if (h.num_parts() != 6)
    throw Error(Error::Code::InvalidArgument, "d2c_r13 requires a 6-partite hypergraph");
  ReductionInstance inst;
  inst.kind = ReductionKind::HypercliqueD2cR13;
  auto edges = h.edge_set();
  auto fg = [&](int part, int idx) { return embed_unit_circle(h.parts[part][idx]); };

  auto add_half_points = [&](int p0, const Rational& last) {
    for (int i0 = 0; i0 < static_cast<int>(h.parts[p0].size()); ++i0)
      for (int i1 = 0; i1 < static_cast<int>(h.parts[p0 + 1].size()); ++i1)
        for (int i2 = 0; i2 < static_cast<int>(h.parts[p0 + 2].size()); ++i2) {
          std::array<std::pair<int, int>, 3> e{{{p0, i0}, {p0 + 1, i1}, {p0 + 2, i2}}};
          if (!edges.count(PartiteHypergraph3::key(e))) continue;
          PointD pt(std::vector<Rational>(13, Rational(0)));
          int idxs[3] = {i0, i1, i2};
          for (int t = 0; t < 3; ++t) {
            auto [f, gg] = fg(p0 + t, idxs[t]);
            pt[2 * (p0 + t)] = f;
            pt[2 * (p0 + t) + 1] = gg;
          }
          pt[12] = last;
          inst.points.push_back(pt);
        }
  };
  add_half_points(0, Rational(1));
  add_half_points(3, Rational(-1));

  Rational half(BigInt(1), BigInt(2));
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k) {
        bool left = i < 3 && j < 3 && k < 3;
        bool right = i >= 3 && j >= 3 && k >= 3;
        if (left || right) continue;
        int in_left = (i < 3) + (j < 3) + (k < 3);
        Rational phi = Rational(in_left) - Rational(3) * half;  // in {-1/2, 1/2}
        for (int vi = 0; vi < static_cast<int>(h.parts[i].size()); ++vi)
          for (int vj = 0; vj < static_cast<int>(h.parts[j].size()); ++vj)
            for (int vk = 0; vk < static_cast<int>(h.parts[k].size()); ++vk) {
              std::array<std::pair<int, int>, 3> e{{{i, vi}, {j, vj}, {k, vk}}};
              if (edges.count(PartiteHypergraph3::key(e))) continue;
              PointD pt(std::vector<Rational>(13, Rational(0)));
              for (auto [part, idx] : e) {
                auto [f, gg] = fg(part, idx);
                pt[2 * part] = -f;
                pt[2 * part + 1] = -gg;
              }
              pt[12] = phi;
              inst.points.push_back(pt);
            }
      }
  Rational sevenhalf(BigInt(7), BigInt(2));
  PointD splus(std::vector<Rational>(13, Rational(0)));
  splus[12] = sevenhalf;
  PointD sminus(std::vector<Rational>(13, Rational(0)));
  sminus[12] = -sevenhalf;
  inst.points.push_back(splus);
  inst.points.push_back(sminus);
  inst.threshold = Rational(BigInt(41), BigInt(4));  // squared radius, strict
  return inst;
}

// 3kappa-hyperclique source: points in R^{7 kappa} over Q[sqrt(39)]; the
// discrete kappa-center squared radius is strictly below 16 iff a hyperclique
// exists.
inline ReductionInstance gen_hyperclique_dkc(const PartiteHypergraph3& h, int kappa) {
  h.validate();
  if (kappa < 2) throw Error(Error::Code::InvalidArgument, "dkc requires kappa >= 2");
  if (h.num_parts() != 3 * kappa)
    throw Error(Error::Code::InvalidArgument, "dkc requires a 3*kappa-partite hypergraph");
  ReductionInstance inst;
  inst.kind = ReductionKind::HypercliqueDkc;
  inst.kappa = kappa;
  int dim = 7 * kappa;
  auto edges = h.edge_set();
  auto fg = [&](int part, int idx) { return embed_unit_circle(h.parts[part][idx]); };

  for (int t = 0; t < kappa; ++t) {
    int p0 = 3 * t;
    for (int i0 = 0; i0 < static_cast<int>(h.parts[p0].size()); ++i0)
      for (int i1 = 0; i1 < static_cast<int>(h.parts[p0 + 1].size()); ++i1)
        for (int i2 = 0; i2 < static_cast<int>(h.parts[p0 + 2].size()); ++i2) {
          std::array<std::pair<int, int>, 3> e{{{p0, i0}, {p0 + 1, i1}, {p0 + 2, i2}}};
          if (!edges.count(PartiteHypergraph3::key(e))) continue;
          Point39 pt(dim, Ext39());
          int idxs[3] = {i0, i1, i2};
          for (int q = 0; q < 3; ++q) {
            auto [f, gg] = fg(p0 + q, idxs[q]);
            pt[2 * (p0 + q)] = Ext39(f);
            pt[2 * (p0 + q) + 1] = Ext39(gg);
          }
          pt[6 * kappa + t] = Ext39(Rational(2));
          inst.ext_points.push_back(pt);
        }
  }
  int parts = 3 * kappa;
  for (int i = 0; i < parts; ++i)
    for (int j = i + 1; j < parts; ++j)
      for (int k = j + 1; k < parts; ++k) {
        int alpha = i / 3, beta = j / 3, gamma = k / 3;
        if (alpha == beta && beta == gamma) continue;
        for (int vi = 0; vi < static_cast<int>(h.parts[i].size()); ++vi)
          for (int vj = 0; vj < static_cast<int>(h.parts[j].size()); ++vj)
            for (int vk = 0; vk < static_cast<int>(h.parts[k].size()); ++vk) {
              std::array<std::pair<int, int>, 3> e{{{i, vi}, {j, vj}, {k, vk}}};
              if (edges.count(PartiteHypergraph3::key(e))) continue;
              Point39 pt(dim, Ext39());
              for (auto [part, idx] : e) {
                auto [f, gg] = fg(part, idx);
                pt[2 * part] = Ext39(-f);
                pt[2 * part + 1] = Ext39(-gg);
              }
              if (alpha != beta && beta != gamma && alpha != gamma) {
                pt[6 * kappa + alpha] = Ext39(Rational(2));
                pt[6 * kappa + beta] = Ext39(Rational(2));
                pt[6 * kappa + gamma] = Ext39(Rational(2));
              } else {
                int same = alpha == beta ? alpha : (alpha == gamma ? alpha : beta);
                int other = alpha == beta ? gamma : (alpha == gamma ? beta : alpha);
                pt[6 * kappa + same] = ext39_mu();
                pt[6 * kappa + other] = ext39_nu();
              }
              inst.ext_points.push_back(pt);
            }
      }
  Rational s56(BigInt(28), BigInt(5));
  for (int t = 0; t < kappa; ++t) {
    Point39 pt(dim, Ext39());
    pt[6 * kappa + t] = Ext39(s56);
    inst.ext_points.push_back(pt);
  }
  inst.threshold = Rational(16);  // squared radius, strict
  return inst;
}

// Exact discrete k-center (squared radius) over Q[sqrt(39)] points.
inline Ext39 dkc_brute_ring(const std::vector<Point39>& pts, int k) {
  int n = static_cast<int>(pts.size());
  if (k > n) throw Error(Error::Code::InvalidArgument, "dkc_brute_ring: k > n");
  std::vector<std::vector<Ext39>> d2(n, std::vector<Ext39>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d2[i][j] = squared_distance39(pts[i], pts[j]);
  std::optional<Ext39> best;
  std::vector<int> pick(k);
  std::function<void(int, int)> rec = [&](int from, int depth) {
    if (depth == k) {
      Ext39 worst;
      for (int i = 0; i < n; ++i) {
        Ext39 m = d2[i][pick[0]];
        for (int t = 1; t < k; ++t)
          if (d2[i][pick[t]] < m) m = d2[i][pick[t]];
        if (worst < m) worst = m;
        if (best && *best < worst) return;
      }
      if (!best || worst < *best) best = worst;
      return;
    }
    for (int j = from; j <= n - (k - depth); ++j) {
      pick[depth] = j;
      rec(j + 1, depth + 1);
    }
  };
  rec(0, 0);
  return *best;
}

struct MaxcovBlock {
  int i, j, k;               // triple of parts, i and j in one half
  std::size_t begin, end;    // point range of this triple's block
};

// 6-hyperclique source for size-2 maximum coverage in R^12; the best pair
// covers at least 18(n^2+n) points iff a hyperclique exists. Infinite
// coordinates are realized as +-100, beyond every finite coordinate.
inline ReductionInstance gen_maxcov2_r12(const PartiteHypergraph3& h,
                                         std::vector<MaxcovBlock>* blocks = nullptr) {
  h.validate();
  if (h.num_parts() != 6)
    throw Error(Error::Code::InvalidArgument, "maxcov2_r12 requires a 6-partite hypergraph");
  std::size_t n = h.parts[0].size();
  for (const auto& p : h.parts)
    if (p.size() != n)
      throw Error(Error::Code::InvalidArgument, "maxcov2_r12 requires equal part sizes");
  ReductionInstance inst;
  inst.kind = ReductionKind::Maxcov2R12;
  auto edges = h.edge_set();
  Rational M(100);

  auto label = [&](int part, int idx) { return h.parts[part][idx]; };
  int id = 0;
  auto add_orthant = [&](int p0) {
    for (int i0 = 0; i0 < static_cast<int>(n); ++i0)
      for (int i1 = 0; i1 < static_cast<int>(n); ++i1)
        for (int i2 = 0; i2 < static_cast<int>(n); ++i2) {
          std::array<std::pair<int, int>, 3> e{{{p0, i0}, {p0 + 1, i1}, {p0 + 2, i2}}};
          if (!edges.count(PartiteHypergraph3::key(e))) continue;
          std::vector<Interval> sides(12);
          int idxs[3] = {i0, i1, i2};
          for (int q = 0; q < 3; ++q) {
            const Rational& x = label(p0 + q, idxs[q]);
            sides[2 * (p0 + q)] = detail::iv(detail::ninf(), false, ExtScalar(x), true);
            sides[2 * (p0 + q) + 1] = detail::iv(detail::ninf(), false, ExtScalar(-x), true);
          }
          inst.ranges.push_back(ExtRect(std::move(sides), std::nullopt, id++));
        }
  };
  add_orthant(0);
  add_orthant(3);

  // degree counters
  auto d_k = [&](int i, int vi, int j, int vj, int k) {
    int cnt = 0;
    for (int vk = 0; vk < static_cast<int>(n); ++vk) {
      std::array<std::pair<int, int>, 3> e{{{i, vi}, {j, vj}, {k, vk}}};
      if (edges.count(PartiteHypergraph3::key(e))) ++cnt;
    }
    return cnt;
  };
  auto d_ij = [&](int k, int vk, int i, int j) {
    int cnt = 0;
    for (int vi = 0; vi < static_cast<int>(n); ++vi)
      for (int vj = 0; vj < static_cast<int>(n); ++vj) {
        std::array<std::pair<int, int>, 3> e{{{i, vi}, {j, vj}, {k, vk}}};
        if (edges.count(PartiteHypergraph3::key(e))) ++cnt;
      }
    return cnt;
  };

  // one block of points per triple (i, j | k) with i, j in one half, k in the other
  auto add_triple_points = [&](int i, int j, int k) {
    std::size_t block_begin = inst.points.size();
    int half0 = i < 3 ? 0 : 3;  // half containing i, j
    int half1 = k < 3 ? 0 : 3;
    int other_in_half0 = -1;
    for (int l = half0; l < half0 + 3; ++l)
      if (l != i && l != j) other_in_half0 = l;
    // points for non-edges (v_i, v_j, v_k)
    for (int vi = 0; vi < static_cast<int>(n); ++vi)
      for (int vj = 0; vj < static_cast<int>(n); ++vj)
        for (int vk = 0; vk < static_cast<int>(n); ++vk) {
          std::array<std::pair<int, int>, 3> e{{{i, vi}, {j, vj}, {k, vk}}};
          if (edges.count(PartiteHypergraph3::key(e))) continue;
          PointD pt(std::vector<Rational>(12, -M));
          pt[2 * i] = label(i, vi);
          pt[2 * i + 1] = -label(i, vi);
          pt[2 * j] = label(j, vj);
          pt[2 * j + 1] = -label(j, vj);
          pt[2 * k] = label(k, vk);
          pt[2 * k + 1] = -label(k, vk);
          inst.points.push_back(pt);
        }
    // d_k(v_i v_j) copies: pair point, other half entirely +inf
    for (int vi = 0; vi < static_cast<int>(n); ++vi)
      for (int vj = 0; vj < static_cast<int>(n); ++vj) {
        int copies = d_k(i, vi, j, vj, k);
        if (!copies) continue;
        PointD pt(std::vector<Rational>(12, M));
        pt[2 * i] = label(i, vi);
        pt[2 * i + 1] = -label(i, vi);
        pt[2 * j] = label(j, vj);
        pt[2 * j + 1] = -label(j, vj);
        pt[2 * other_in_half0] = -M;
        pt[2 * other_in_half0 + 1] = -M;
        for (int c = 0; c < copies; ++c) inst.points.push_back(pt);
      }
    // d_ij(v_k) copies: single point, i/j half entirely +inf
    for (int vk = 0; vk < static_cast<int>(n); ++vk) {
      int copies = d_ij(k, vk, i, j);
      if (!copies) continue;
      PointD pt(std::vector<Rational>(12, M));
      pt[2 * k] = label(k, vk);
      pt[2 * k + 1] = -label(k, vk);
      for (int l = half1; l < half1 + 3; ++l) {
        if (l == k) continue;
        pt[2 * l] = -M;
        pt[2 * l + 1] = -M;
      }
      for (int c = 0; c < copies; ++c) inst.points.push_back(pt);
    }
    if (blocks) blocks->push_back(MaxcovBlock{i, j, k, block_begin, inst.points.size()});
  };
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (int k = 3; k < 6; ++k) add_triple_points(i, j, k);
  for (int i = 3; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = 0; k < 3; ++k) add_triple_points(i, j, k);

  inst.threshold = Rational(18) * Rational(static_cast<long long>(n) * n + n);
  return inst;
}

struct VerificationReport {
  ReductionKind kind;
  bool agree = false;
  std::string graph_side;
  std::string geometry_side;
};

inline VerificationReport verify_reduction(ReductionKind kind, const WeightedGraph* g,
                                           const PartiteHypergraph3* h,
                                           const ReductionInstance& inst,
                                           const OracleBudget& budget = OracleBudget{}) {
  VerificationReport rep;
  rep.kind = kind;
  switch (kind) {
    case ReductionKind::WeightedTriangleR2: {
      auto tri = graph_min_triangle(*g);
      auto cov = brute_cover_k(inst.points, inst.ranges, 3, true, budget);
      rep.graph_side = tri ? "min triangle weight " + tri->weight.str() : "no triangle";
      rep.geometry_side = cov ? "min cover weight " + cov->weight.str() : "infeasible";
      if (tri)
        rep.agree = cov && cov->weight == inst.threshold + tri->weight;
      else
        rep.agree = !cov || cov->weight >= inst.threshold + Rational(1);
      break;
    }
    case ReductionKind::TriangleBoxesR3:
    case ReductionKind::TriangleOrthantsR4: {
      bool tri = graph_has_triangle(*g);
      auto cov = brute_cover_k(inst.points, inst.ranges, 3, false, budget);
      rep.graph_side = tri ? "triangle" : "no triangle";
      rep.geometry_side = cov ? "3-cover exists" : "infeasible";
      rep.agree = tri == cov.has_value();
      break;
    }
    case ReductionKind::D3cR4: {
      bool tri = graph_has_triangle(*g);
      auto sol = brute_discrete_kcenter(inst.points, 3, Metric::Linf, nullptr, budget);
      rep.graph_side = tri ? "triangle" : "no triangle";
      rep.geometry_side = "radius " + sol.radius.str();
      rep.agree = tri == (sol.radius <= inst.threshold);
      break;
    }
    case ReductionKind::Clique4Cover6R2: {
      auto clique = graph_min_4clique(*g);
      auto cov = brute_cover_k(inst.points, inst.ranges, 6, true, budget);
      rep.graph_side = clique ? "min 4-clique weight " + clique->weight.str() : "no 4-clique";
      rep.geometry_side = cov ? "min cover weight " + cov->weight.str() : "infeasible";
      if (clique)
        rep.agree = cov && cov->weight == inst.threshold + clique->weight;
      else
        rep.agree = !cov || cov->weight >= inst.threshold + Rational(1);
      break;
    }
    case ReductionKind::HypercliqueD2cR13: {
      bool hc = hyperclique_exists(*h);
      auto sol = euclid_dkc_brute(inst.points, 2, nullptr, budget);
      rep.graph_side = hc ? "hyperclique" : "no hyperclique";
      rep.geometry_side = "squared radius " + sol.radius.str();
      rep.agree = hc == (sol.radius < inst.threshold);
      break;
    }
    case ReductionKind::HypercliqueDkc: {
      bool hc = hyperclique_exists(*h);
      Ext39 r2 = dkc_brute_ring(inst.ext_points, inst.kappa);
      rep.graph_side = hc ? "hyperclique" : "no hyperclique";
      rep.geometry_side = "squared radius " + r2.a.str() + (r2.b.is_zero() ? "" : "+" + r2.b.str() + "*sqrt39");
      rep.agree = hc == (r2 < Ext39(inst.threshold));
      break;
    }
    case ReductionKind::Maxcov2R12: {
      bool hc = hyperclique_exists(*h);
      auto mc = brute_maxcov(inst.points, inst.ranges, budget);
      rep.graph_side = hc ? "hyperclique" : "no hyperclique";
      rep.geometry_side = "best pair covers " + std::to_string(mc.count);
      rep.agree = hc == (Rational(mc.count) >= inst.threshold);
      break;
    }
  }
  return rep;
}

}  // namespace cover3
