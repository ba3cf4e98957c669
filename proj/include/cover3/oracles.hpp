// Exhaustive reference solvers; the ground truth every fast path is tested
// against. These never consult the solver code paths.
#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "cover3/geometry.hpp"
#include "cover3/graphs.hpp"

namespace cover3 {

struct OracleBudget {
  long long max_combinations = 8'000'000'000;
  long long wall_ms = 120'000;
};

namespace detail {

class Bitset {
 public:
  explicit Bitset(int n = 0) : n_(n), w_((n + 63) / 64, 0) {}
  void set(int i) { w_[i >> 6] |= 1ull << (i & 63); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void or_with(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  }
  bool all() const {
    int full = n_ / 64;
    for (int i = 0; i < full; ++i)
      if (w_[i] != ~0ull) return false;
    int rest = n_ & 63;
    if (rest && w_[full] != ((1ull << rest) - 1)) return false;
    return true;
  }
  int first_unset() const {
    for (int i = 0; i < n_; ++i)
      if (!test(i)) return i;
    return -1;
  }
  long long count() const {
    long long c = 0;
    for (auto v : w_) c += __builtin_popcountll(v);
    return c;
  }
  friend Bitset operator|(Bitset a, const Bitset& b) {
    a.or_with(b);
    return a;
  }
  friend long long and_count(const Bitset& a, const Bitset& b) {
    long long c = 0;
    for (std::size_t i = 0; i < a.w_.size(); ++i) c += __builtin_popcountll(a.w_[i] & b.w_[i]);
    return c;
  }
  friend bool and_empty(const Bitset& a, const Bitset& b) {
    for (std::size_t i = 0; i < a.w_.size(); ++i)
      if (a.w_[i] & b.w_[i]) return false;
    return true;
  }

 private:
  int n_;
  std::vector<std::uint64_t> w_;
};

inline long long combinations(long long n, int k) {
  BigInt c = 1;
  for (int i = 0; i < k; ++i) {
    c *= (n - i);
    c /= (i + 1);
  }
  if (c > BigInt(std::numeric_limits<long long>::max())) return std::numeric_limits<long long>::max();
  return static_cast<long long>(c);
}

struct Deadline {
  std::chrono::steady_clock::time_point end;
  explicit Deadline(long long ms)
      : end(std::chrono::steady_clock::now() + std::chrono::milliseconds(ms)) {}
  void check() const {
    if (std::chrono::steady_clock::now() > end)
      throw Error(Error::Code::BudgetExceeded, "oracle wall-clock budget exceeded");
  }
};

}  // namespace detail

struct CoverResult {
  std::vector<int> ids;  // sorted, exactly k
  Rational weight;
};

// Minimum-weight k-subset of R covering P (any feasible one when unweighted);
// returns exactly k sets, padding with the cheapest extras when fewer suffice.
inline std::optional<CoverResult> brute_cover_k(const std::vector<PointD>& points,
                                                const std::vector<ExtRect>& rects, int k,
                                                bool weighted,
                                                const OracleBudget& budget = OracleBudget{}) {
  if (k < 1 || k > 6) throw Error(Error::Code::InvalidArgument, "brute_cover_k: k must be in 1..6");
  int m = static_cast<int>(rects.size());
  int n = static_cast<int>(points.size());
  if (m < k) return std::nullopt;
  if (detail::combinations(m, k) > budget.max_combinations)
    throw Error(Error::Code::BudgetExceeded, "brute_cover_k: combination budget exceeded");
  detail::Deadline deadline(budget.wall_ms);

  std::vector<detail::Bitset> cover(m, detail::Bitset(n));
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i)
      if (rects[j].contains(points[i])) cover[j].set(i);
  std::vector<Rational> w(m);
  bool negative = false;
  for (int j = 0; j < m; ++j) {
    w[j] = weighted ? rects[j].weight.value_or(Rational(1)) : Rational(1);
    negative |= w[j] < Rational(0);
  }
  std::vector<int> by_weight(m);
  for (int j = 0; j < m; ++j) by_weight[j] = j;
  std::sort(by_weight.begin(), by_weight.end(), [&](int a, int b) {
    auto c = w[a] <=> w[b];
    if (c != 0) return c < 0;
    return a < b;
  });

  std::optional<CoverResult> best;
  std::vector<int> chosen;
  chosen.reserve(k);
  std::vector<int> per_point_rects(n);

  auto pad_and_consider = [&](Rational weight_so_far) {
    // complete with the cheapest unused rectangles
    std::vector<int> ids = chosen;
    Rational total = weight_so_far;
    for (int cand : by_weight) {
      if (static_cast<int>(ids.size()) == k) break;
      if (std::find(ids.begin(), ids.end(), cand) == ids.end()) {
        ids.push_back(cand);
        total += w[cand];
      }
    }
    if (static_cast<int>(ids.size()) < k) return;
    std::sort(ids.begin(), ids.end());
    if (!best || total < best->weight || (total == best->weight && ids < best->ids))
      best = CoverResult{ids, total};
  };

  // exhaustive backtracking on the first uncovered point; admissible pruning
  // only when all weights are nonnegative
  std::function<void(detail::Bitset, Rational)> rec = [&](detail::Bitset covered, Rational sum) {
    deadline.check();
    int focus = covered.all() ? -1 : covered.first_unset();
    if (focus < 0) {
      pad_and_consider(sum);
      return;
    }
    if (static_cast<int>(chosen.size()) == k) return;
    if (!negative && best && sum >= best->weight) return;
    for (int j = 0; j < m; ++j) {
      if (!cover[j].test(focus)) continue;
      if (std::find(chosen.begin(), chosen.end(), j) != chosen.end()) continue;
      chosen.push_back(j);
      rec(covered | cover[j], sum + w[j]);
      chosen.pop_back();
    }
  };
  rec(detail::Bitset(n), Rational(0));
  return best;
}

struct CenterSolution {
  Rational radius;           // L-inf radius, or squared L2 radius
  std::vector<int> centers;  // indices into the candidate set
};

enum class Metric { L2, Linf };

// Feasibility of covering `points` with k balls of the given radius centered
// at candidate points; exhaustive backtracking over the first uncovered point.
inline std::optional<std::vector<int>> brute_kcenter_decide(
    const std::vector<PointD>& points, const std::vector<PointD>& centers, int k,
    const Rational& radius, Metric metric, const OracleBudget& budget = OracleBudget{}) {
  int n = static_cast<int>(points.size());
  int c = static_cast<int>(centers.size());
  if (n == 0) {
    std::vector<int> ids;
    for (int i = 0; i < std::min(k, c); ++i) ids.push_back(i);
    if (static_cast<int>(ids.size()) < k) return std::nullopt;
    return ids;
  }
  detail::Deadline deadline(budget.wall_ms);
  std::vector<detail::Bitset> cov(c, detail::Bitset(n));
  for (int j = 0; j < c; ++j)
    for (int i = 0; i < n; ++i) {
      bool in = metric == Metric::Linf ? linf_distance(points[i], centers[j]) <= radius
                                       : squared_distance(points[i], centers[j]) <= radius;
      if (in) cov[j].set(i);
    }
  std::vector<int> chosen;
  std::optional<std::vector<int>> found;
  std::function<void(detail::Bitset)> rec = [&](detail::Bitset covered) {
    if (found) return;
    deadline.check();
    int focus = covered.all() ? -1 : covered.first_unset();
    if (focus < 0) {
      std::vector<int> ids = chosen;
      for (int j = 0; j < c && static_cast<int>(ids.size()) < k; ++j)
        if (std::find(ids.begin(), ids.end(), j) == ids.end()) ids.push_back(j);
      if (static_cast<int>(ids.size()) == k) {
        std::sort(ids.begin(), ids.end());
        found = ids;
      }
      return;
    }
    if (static_cast<int>(chosen.size()) == k) return;
    for (int j = 0; j < c; ++j) {
      if (!cov[j].test(focus)) continue;
      chosen.push_back(j);
      rec(covered | cov[j]);
      chosen.pop_back();
      if (found) return;
    }
  };
  rec(detail::Bitset(n));
  return found;
}

// Exact optimal discrete k-center over the candidate set (default: the points
// themselves). Radius is the L-inf radius or the squared L2 radius.
inline CenterSolution brute_discrete_kcenter(const std::vector<PointD>& points, int k, Metric metric,
                                             const std::vector<PointD>* supply = nullptr,
                                             const OracleBudget& budget = OracleBudget{}) {
  const std::vector<PointD>& centers = supply ? *supply : points;
  int n = static_cast<int>(points.size());
  int c = static_cast<int>(centers.size());
  if (k > c) throw Error(Error::Code::InvalidArgument, "k exceeds candidate count");
  if (detail::combinations(c, std::min(k, 3)) > budget.max_combinations)
    throw Error(Error::Code::BudgetExceeded, "brute_discrete_kcenter: budget exceeded");
  std::vector<Rational> candidates;
  candidates.push_back(Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < c; ++j)
      candidates.push_back(metric == Metric::Linf ? linf_distance(points[i], centers[j])
                                                  : squared_distance(points[i], centers[j]));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  int lo = 0, hi = static_cast<int>(candidates.size()) - 1;
  std::optional<std::vector<int>> witness;
  while (lo < hi) {
    int mid = lo + (hi - lo) / 2;
    auto f = brute_kcenter_decide(points, centers, k, candidates[mid], metric, budget);
    if (f) {
      witness = f;
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (!witness) witness = brute_kcenter_decide(points, centers, k, candidates[lo], metric, budget);
  if (!witness) throw Error(Error::Code::InvalidArgument, "no feasible k-center cover");
  return CenterSolution{candidates[lo], *witness};
}

struct MaxCoverResult {
  int a = -1, b = -1;
  long long count = 0;
};

// Best pair of ranges by covered multiset cardinality, counts by
// inclusion-exclusion over the per-range coverage sets.
inline MaxCoverResult brute_maxcov(const std::vector<PointD>& points,
                                   const std::vector<ExtRect>& rects,
                                   const OracleBudget& budget = OracleBudget{}) {
  int m = static_cast<int>(rects.size());
  int n = static_cast<int>(points.size());
  if (static_cast<long long>(m) * m > budget.max_combinations)
    throw Error(Error::Code::BudgetExceeded, "brute_maxcov: budget exceeded");
  std::vector<detail::Bitset> cov(m, detail::Bitset(n));
  std::vector<long long> single(m, 0);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i)
      if (rects[j].contains(points[i])) cov[j].set(i);
    single[j] = cov[j].count();
  }
  MaxCoverResult best;
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      long long cnt = single[a] + single[b] - and_count(cov[a], cov[b]);
      if (b == a) cnt = single[a];
      if (cnt > best.count) best = MaxCoverResult{a, b, cnt};
    }
  return best;
}

// ---------- graph-side oracles ----------

struct TriangleResult {
  std::array<int, 3> vertices;
  Rational weight;
};

inline std::optional<TriangleResult> graph_min_triangle(const WeightedGraph& g) {
  int n = g.n();
  std::vector<std::vector<std::optional<Rational>>> adj(
      n, std::vector<std::optional<Rational>>(n));
  for (const auto& e : g.edges) {
    Rational w = e.w.value_or(Rational(0));
    adj[e.u][e.v] = w;
    adj[e.v][e.u] = w;
  }
  std::optional<TriangleResult> best;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!adj[a][b]) continue;
      for (int c = b + 1; c < n; ++c) {
        if (!adj[a][c] || !adj[b][c]) continue;
        Rational w = *adj[a][b] + *adj[a][c] + *adj[b][c];
        if (!best || w < best->weight) best = TriangleResult{{a, b, c}, w};
      }
    }
  return best;
}

inline bool graph_has_triangle(const WeightedGraph& g) { return graph_min_triangle(g).has_value(); }

struct CliqueResult {
  std::array<int, 4> vertices;
  Rational weight;
};

inline std::optional<CliqueResult> graph_min_4clique(const WeightedGraph& g) {
  int n = g.n();
  std::vector<std::vector<std::optional<Rational>>> adj(
      n, std::vector<std::optional<Rational>>(n));
  for (const auto& e : g.edges) {
    Rational w = e.w.value_or(Rational(0));
    adj[e.u][e.v] = w;
    adj[e.v][e.u] = w;
  }
  std::optional<CliqueResult> best;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!adj[a][b]) continue;
      for (int c = b + 1; c < n; ++c) {
        if (!adj[a][c] || !adj[b][c]) continue;
        for (int d = c + 1; d < n; ++d) {
          if (!adj[a][d] || !adj[b][d] || !adj[c][d]) continue;
          Rational w = *adj[a][b] + *adj[a][c] + *adj[a][d] + *adj[b][c] + *adj[b][d] + *adj[c][d];
          if (!best || w < best->weight) best = CliqueResult{{a, b, c, d}, w};
        }
      }
    }
  return best;
}

// Hyperclique spanning all parts (one vertex per part, all part-triples in E).
inline bool hyperclique_exists(const PartiteHypergraph3& h) {
  int m = h.num_parts();
  auto edges = h.edge_set();
  std::vector<int> pick(m, 0);
  std::function<bool(int)> rec = [&](int p) -> bool {
    if (p == m) {
      for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
          for (int c = b + 1; c < m; ++c) {
            std::array<std::pair<int, int>, 3> e{{{a, pick[a]}, {b, pick[b]}, {c, pick[c]}}};
            if (!edges.count(PartiteHypergraph3::key(e))) return false;
          }
      return true;
    }
    for (int i = 0; i < static_cast<int>(h.parts[p].size()); ++i) {
      pick[p] = i;
      if (rec(p + 1)) return true;
    }
    return false;
  };
  if (m == 0) return false;
  for (const auto& part : h.parts)
    if (part.empty()) return false;
  return rec(0);
}

}  // namespace cover3
