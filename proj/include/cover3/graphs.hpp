// Graph and 3-uniform partite hypergraph inputs for the hardness-construction
// generators.
#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "cover3/rational.hpp"

namespace cover3 {

struct GraphEdge {
  int u = 0, v = 0;  // indices into labels
  std::optional<Rational> w;
};

// Vertices carry rational labels; edges may carry weights.
struct WeightedGraph {
  std::vector<Rational> labels;
  std::vector<GraphEdge> edges;

  int n() const { return static_cast<int>(labels.size()); }
  int m() const { return static_cast<int>(edges.size()); }

  bool weighted() const {
    for (const auto& e : edges)
      if (e.w) return true;
    return false;
  }

  void validate_labels(bool require_zero, bool require_tenth) const {
    std::set<Rational> seen;
    Rational lo(0), hi(BigInt(1), BigInt(10));
    bool has_lo = false, has_hi = false;
    for (const auto& l : labels) {
      if (!seen.insert(l).second) throw Error(Error::Code::InvalidArgument, "duplicate vertex label");
      if (l < lo || l > hi)
        throw Error(Error::Code::InvalidArgument, "vertex label outside [0, 1/10]");
      has_lo |= l == lo;
      has_hi |= l == hi;
    }
    if (require_zero && !has_lo)
      throw Error(Error::Code::InvalidArgument, "labels must include 0");
    if (require_tenth && !has_hi)
      throw Error(Error::Code::InvalidArgument, "labels must include 1/10");
    for (const auto& e : edges) {
      if (e.u < 0 || e.u >= n() || e.v < 0 || e.v >= n() || e.u == e.v)
        throw Error(Error::Code::InvalidArgument, "bad edge endpoints");
      if (e.w && (*e.w < Rational(0) || *e.w > hi))
        throw Error(Error::Code::InvalidArgument, "edge weight outside [0, 1/10]");
    }
  }

  bool has_edge(int u, int v) const {
    for (const auto& e : edges)
      if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return true;
    return false;
  }
  std::optional<Rational> edge_weight(int u, int v) const {
    for (const auto& e : edges)
      if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return e.w.value_or(Rational(0));
    return std::nullopt;
  }
};

struct HyperEdge {
  // (part, index-within-part), three distinct parts
  std::array<std::pair<int, int>, 3> ends;
};

// m-partite 3-uniform hypergraph with rational vertex labels in [0, 1].
struct PartiteHypergraph3 {
  std::vector<std::vector<Rational>> parts;
  std::vector<HyperEdge> edges;

  int num_parts() const { return static_cast<int>(parts.size()); }

  void validate() const {
    for (const auto& part : parts) {
      std::set<Rational> seen;
      for (const auto& l : part) {
        if (l < Rational(0) || l > Rational(1))
          throw Error(Error::Code::InvalidArgument, "hypergraph label outside [0,1]");
        if (!seen.insert(l).second)
          throw Error(Error::Code::InvalidArgument, "duplicate label within a part");
      }
    }
    for (const auto& e : edges) {
      std::set<int> ps;
      for (auto [p, i] : e.ends) {
        if (p < 0 || p >= num_parts() || i < 0 || i >= static_cast<int>(parts[p].size()))
          throw Error(Error::Code::InvalidArgument, "bad hyperedge endpoint");
        ps.insert(p);
      }
      if (ps.size() != 3)
        throw Error(Error::Code::InvalidArgument, "hyperedge must span three distinct parts");
    }
  }

  // canonical edge key: sorted by part
  static std::array<std::pair<int, int>, 3> key(std::array<std::pair<int, int>, 3> e) {
    std::sort(e.begin(), e.end());
    return e;
  }

  std::set<std::array<std::pair<int, int>, 3>> edge_set() const {
    std::set<std::array<std::pair<int, int>, 3>> s;
    for (const auto& e : edges) s.insert(key(e.ends));
    return s;
  }
};

}  // namespace cover3
