//  Copyright 2026 The hyperlat Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef HYPERLAT_METRIC_SETS_HPP_
#define HYPERLAT_METRIC_SETS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

// Sampled closed sets inside a bounded window of a metric space. A "closed
// set" here is a finite point cloud; all set operators are exact on the
// sample and every caller is responsible for documenting its sampling
// density. The window plays the role of bounded compactness at desk scale.
namespace hyperlat::metric {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Point = std::vector<double>;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Carrier-space description: dimension, window, comparison tolerance, and
// the distance rule (Euclidean, or a finite table for discrete spaces whose
// points are identified by a single integer coordinate).
class MetricContext {
 public:
  static MetricContext euclidean(std::vector<Interval> window, double tol = 1e-9) {
    MetricContext ctx;
    ctx.window_ = std::move(window);
    ctx.tol_ = tol;
    ctx.validate_window();
    return ctx;
  }

  // Table spaces: point i is the 1-vector {i}; distances come from `table`,
  // which must satisfy the metric axioms (validated here).
  static MetricContext from_table(std::vector<std::vector<double>> table, double tol = 1e-9) {
    MetricContext ctx;
    ctx.table_ = std::move(table);
    ctx.tol_ = tol;
    const std::size_t m = ctx.table_.size();
    if (m == 0) throw std::invalid_argument("empty distance table");
    for (const auto& row : ctx.table_)
      if (row.size() != m) throw std::invalid_argument("distance table not square");
    for (std::size_t i = 0; i < m; ++i) {
      if (std::abs(ctx.table_[i][i]) > tol)
        throw std::invalid_argument("table metric: d(x,x) != 0");
      for (std::size_t j = 0; j < m; ++j) {
        if (i != j && ctx.table_[i][j] <= tol)
          throw std::invalid_argument("table metric: zero distance between distinct points");
        if (std::abs(ctx.table_[i][j] - ctx.table_[j][i]) > tol)
          throw std::invalid_argument("table metric: not symmetric");
        for (std::size_t k = 0; k < m; ++k)
          if (ctx.table_[i][k] > ctx.table_[i][j] + ctx.table_[j][k] + tol)
            throw std::invalid_argument("table metric: triangle inequality fails");
      }
    }
    ctx.window_ = {{0.0, static_cast<double>(m - 1)}};
    return ctx;
  }

  std::size_t dim() const { return window_.size(); }
  double tol() const { return tol_; }
  void set_tol(double t) { tol_ = t; }
  const std::vector<Interval>& window() const { return window_; }
  bool is_table() const { return !table_.empty(); }
  std::size_t table_size() const { return table_.size(); }

  double dist(const Point& a, const Point& b) const {
    if (is_table()) {
      const auto ia = static_cast<std::size_t>(std::llround(a.at(0)));
      const auto ib = static_cast<std::size_t>(std::llround(b.at(0)));
      return table_.at(ia).at(ib);
    }
    double s = 0.0;
    for (std::size_t k = 0; k < window_.size(); ++k) {
      const double d = a[k] - b[k];
      s += d * d;
    }
    return std::sqrt(s);
  }

  bool in_window(const Point& p) const {
    if (p.size() != window_.size()) return false;
    for (std::size_t k = 0; k < window_.size(); ++k)
      if (p[k] < window_[k].lo - tol_ || p[k] > window_[k].hi + tol_) return false;
    return true;
  }

  double window_diameter() const {
    if (is_table()) {
      double m = 0.0;
      for (const auto& row : table_)
        for (double d : row) m = std::max(m, d);
      return m;
    }
    double s = 0.0;
    for (const auto& iv : window_) {
      const double w = iv.hi - iv.lo;
      s += w * w;
    }
    return std::sqrt(s);
  }

 private:
  void validate_window() const {
    if (window_.empty()) throw std::invalid_argument("window must have dimension >= 1");
    for (const auto& iv : window_)
      if (iv.hi < iv.lo) throw std::invalid_argument("window interval has hi < lo");
    if (tol_ < 0) throw std::invalid_argument("tol must be nonnegative");
  }

  std::vector<Interval> window_;
  std::vector<std::vector<double>> table_;
  double tol_ = 1e-9;
};

// A finite point cloud standing in for a closed set. The empty cloud
// represents the empty set. Points are kept sorted lexicographically and
// deduplicated within tol, so equal sets serialize identically.
struct SampledSet {
  std::vector<Point> points;
  std::string label;

  bool empty() const { return points.empty(); }
  std::size_t size() const { return points.size(); }
};

inline bool lex_less(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline SampledSet make_sampled_set(const MetricContext& ctx, std::vector<Point> pts,
                                   std::string label = "") {
  for (const auto& p : pts) {
    if (p.size() != ctx.dim())
      throw std::invalid_argument("point dimension mismatch in set '" + label + "'");
    if (!ctx.in_window(p))
      throw std::invalid_argument("point outside window in set '" + label + "'");
  }
  std::sort(pts.begin(), pts.end(), lex_less);
  SampledSet s;
  s.label = std::move(label);
  for (auto& p : pts) {
    bool dup = false;
    for (const auto& q : s.points)
      if (ctx.dist(p, q) <= ctx.tol()) { dup = true; break; }
    if (!dup) s.points.push_back(std::move(p));
  }
  return s;
}

// d(x, S) = min over the sample; +inf iff S is empty.
inline double dist_point_set(const MetricContext& ctx, const Point& x, const SampledSet& s) {
  double best = kInf;
  for (const auto& p : s.points) best = std::min(best, ctx.dist(x, p));
  return best;
}

// max of the two one-sided excesses. Conventions: H(∅,∅) = 0, and the
// distance is +inf when exactly one operand is empty.
inline double hausdorff(const MetricContext& ctx, const SampledSet& a, const SampledSet& b) {
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return kInf;
  double excess = 0.0;
  for (const auto& p : a.points) excess = std::max(excess, dist_point_set(ctx, p, b));
  for (const auto& q : b.points) excess = std::max(excess, dist_point_set(ctx, q, a));
  return excess;
}

inline bool set_contains(const MetricContext& ctx, const SampledSet& s, const Point& x) {
  return dist_point_set(ctx, x, s) <= ctx.tol();
}

inline bool subset_of(const MetricContext& ctx, const SampledSet& a, const SampledSet& b) {
  for (const auto& p : a.points)
    if (!set_contains(ctx, b, p)) return false;
  return true;
}

inline SampledSet intersect(const MetricContext& ctx, const SampledSet& a, const SampledSet& b) {
  std::vector<Point> pts;
  for (const auto& p : a.points)
    if (set_contains(ctx, b, p)) pts.push_back(p);
  return make_sampled_set(ctx, std::move(pts), a.label);
}

inline SampledSet unite(const MetricContext& ctx, const SampledSet& a, const SampledSet& b) {
  std::vector<Point> pts = a.points;
  pts.insert(pts.end(), b.points.begin(), b.points.end());
  return make_sampled_set(ctx, std::move(pts), a.label);
}

// The deterministic countable dense sequence feeding the Wijsman sum: for
// refinement level L = 0, 1, 2, ... emit every window grid point at spacing
// width/2^L per axis that has not appeared at a coarser level, in
// lexicographic coordinate order. Bit-for-bit reproducible for a fixed
// window; no randomness anywhere.
inline std::vector<Point> dense_sequence(const MetricContext& ctx, std::size_t count) {
  if (ctx.is_table())
    throw std::domain_error("dense_sequence requires a Euclidean context");
  if (count < 1) throw std::invalid_argument("dense_sequence: count must be >= 1");
  const auto& win = ctx.window();
  const std::size_t d = win.size();
  bool all_degenerate = true;
  for (const auto& iv : win)
    if (iv.hi > iv.lo) all_degenerate = false;
  if (all_degenerate) {
    if (count > 1)
      throw std::invalid_argument("dense_sequence: degenerate window has a single point");
    Point p(d);
    for (std::size_t k = 0; k < d; ++k) p[k] = win[k].lo;
    return {p};
  }

  std::vector<Point> out;
  for (std::size_t level = 0; out.size() < count; ++level) {
    const std::uint64_t cells = std::uint64_t{1} << level;
    // Odometer over per-axis grid indices, last axis fastest; coordinates
    // increase with the index, so this *is* lexicographic coordinate order.
    std::vector<std::uint64_t> idx(d, 0);
    std::vector<std::uint64_t> max_idx(d);
    for (std::size_t k = 0; k < d; ++k) max_idx[k] = (win[k].hi > win[k].lo) ? cells : 0;
    while (true) {
      bool fresh = (level == 0);
      if (!fresh) {
        for (std::size_t k = 0; k < d; ++k)
          if (max_idx[k] > 0 && (idx[k] % 2 == 1)) { fresh = true; break; }
      }
      if (fresh) {
        Point p(d);
        for (std::size_t k = 0; k < d; ++k) {
          const double width = win[k].hi - win[k].lo;
          p[k] = (max_idx[k] == 0)
                     ? win[k].lo
                     : win[k].lo + width * (static_cast<double>(idx[k]) / static_cast<double>(cells));
        }
        out.push_back(std::move(p));
        if (out.size() == count) return out;
      }
      // Advance the odometer, last axis fastest; when every axis rolls
      // over the level is complete.
      bool level_done = true;
      std::size_t k = d;
      while (k-- > 0) {
        if (idx[k] < max_idx[k]) { ++idx[k]; level_done = false; break; }
        idx[k] = 0;
      }
      if (level_done) break;
    }
  }
  return out;
}

struct WijsmanValue {
  double value = 0.0;
  double truncation_bound = 0.0;  // tail of the weight series: 2^-horizon
};

// Truncated Wijsman distance: sum over the first `horizon` dense points of
// 2^-i * min{1, |d(x_i, A) - d(x_i, B)|}. Defined on nonempty sets only.
inline WijsmanValue wijsman_rho(const MetricContext& ctx, const SampledSet& a,
                                const SampledSet& b, std::size_t horizon) {
  if (a.empty() || b.empty())
    throw std::domain_error("wijsman_rho is defined on nonempty sets");
  if (horizon < 1) throw std::invalid_argument("wijsman_rho: horizon must be >= 1");
  const auto dense = dense_sequence(ctx, horizon);
  double sum = 0.0;
  double weight = 1.0;
  for (const auto& x : dense) {
    weight *= 0.5;
    const double gap = std::abs(dist_point_set(ctx, x, a) - dist_point_set(ctx, x, b));
    sum += weight * std::min(1.0, gap);
  }
  return {sum, std::ldexp(1.0, -static_cast<int>(horizon))};
}

}  // namespace hyperlat::metric

#endif  // HYPERLAT_METRIC_SETS_HPP_
