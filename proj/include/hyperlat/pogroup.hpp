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

#ifndef HYPERLAT_POGROUP_HPP_
#define HYPERLAT_POGROUP_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperlat/embedding.hpp"

// Partially ordered groups at desk scale: windowed samples of genuine
// groups, Minkowski ideal products, the ideal identity x-down * y-down =
// (xy)-down, and the Loewner order on symmetric matrices. Windowed carriers
// are not closed under the operation; every product-based check tracks what
// got clipped, and the ideal identity is asserted only inside a declared
// safe window where clipping cannot reach.
namespace hyperlat::pogroup {

using embedding::SampledMetricPoset;
using metric::Interval;
using metric::Point;
using metric::SampledSet;

enum class OpRule { VectorAdd, CustomTable };

class PoGroup {
 public:
  // Vector-addition group on the carrier sample; the identity must be a
  // sample point.
  PoGroup(SampledMetricPoset carrier, Point identity)
      : carrier_(std::move(carrier)), op_(OpRule::VectorAdd), identity_(std::move(identity)) {
    identity_index_ = carrier_.index_of(identity_);
  }

  // Table group: op_table[i][j] = index of x_i * x_j, or npos when the
  // product leaves the sample; inv_table likewise.
  PoGroup(SampledMetricPoset carrier, std::vector<std::vector<std::size_t>> op_table,
          std::vector<std::size_t> inv_table, std::size_t identity_index)
      : carrier_(std::move(carrier)),
        op_(OpRule::CustomTable),
        op_table_(std::move(op_table)),
        inv_table_(std::move(inv_table)),
        identity_index_(identity_index) {
    identity_ = carrier_.point(identity_index_);
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  const SampledMetricPoset& carrier() const { return carrier_; }
  const Point& identity() const { return identity_; }
  std::size_t identity_index() const { return identity_index_; }
  OpRule op_rule() const { return op_; }

  Point product(const Point& a, const Point& b) const {
    if (op_ == OpRule::VectorAdd) {
      Point out(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
      return out;
    }
    const std::size_t r = op_table_[carrier_.index_of(a)][carrier_.index_of(b)];
    if (r == npos) throw std::domain_error("table product leaves the sample");
    return carrier_.point(r);
  }

  Point inverse(const Point& a) const {
    if (op_ == OpRule::VectorAdd) {
      Point out(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) out[k] = -a[k];
      return out;
    }
    const std::size_t r = inv_table_[carrier_.index_of(a)];
    if (r == npos) throw std::domain_error("table inverse leaves the sample");
    return carrier_.point(r);
  }

  // Product as a sample index, when it lands on the sample.
  std::optional<std::size_t> product_index(std::size_t i, std::size_t j) const {
    if (op_ == OpRule::CustomTable) {
      const std::size_t r = op_table_[i][j];
      return r == npos ? std::nullopt : std::optional<std::size_t>(r);
    }
    return find_index(product(carrier_.point(i), carrier_.point(j)));
  }

  std::optional<std::size_t> inverse_index(std::size_t i) const {
    if (op_ == OpRule::CustomTable) {
      const std::size_t r = inv_table_[i];
      return r == npos ? std::nullopt : std::optional<std::size_t>(r);
    }
    return find_index(inverse(carrier_.point(i)));
  }

  // Exact lexicographic binary search over the sorted sample, with a tol
  // fallback for inexact coordinates.
  std::optional<std::size_t> find_index(const Point& p) const {
    const auto& pts = carrier_.sample().points;
    auto it = std::lower_bound(pts.begin(), pts.end(), p, metric::lex_less);
    if (it != pts.end() && carrier_.ctx().dist(*it, p) <= carrier_.ctx().tol())
      return static_cast<std::size_t>(it - pts.begin());
    if (it != pts.begin() && carrier_.ctx().dist(*(it - 1), p) <= carrier_.ctx().tol())
      return static_cast<std::size_t>(it - pts.begin() - 1);
    return std::nullopt;
  }

 private:
  SampledMetricPoset carrier_;
  OpRule op_;
  std::vector<std::vector<std::size_t>> op_table_;
  std::vector<std::size_t> inv_table_;
  Point identity_;
  std::size_t identity_index_ = 0;
};

struct PoGroupViolation {
  std::string kind;  // "identity" | "inverse" | "associativity" | "translation"
  std::vector<std::size_t> witness;
};

struct PoGroupReport {
  bool valid = false;
  std::vector<PoGroupViolation> violations;
  std::size_t triples_checked = 0;
};

// Group axioms on in-sample triples plus translation invariance of the
// order, checked as a biconditional: x <= y iff xz <= yz iff zx <= zy
// whenever the four products land on the sample. The biconditional is the
// right desk-scale check because on a genuine group the converse direction
// follows by translating with the inverse, which a window may clip away.
inline PoGroupReport validate_pogroup(const PoGroup& g, std::size_t max_triples = 2000000) {
  PoGroupReport report;
  const auto& space = g.carrier();
  const std::size_t n = space.size();
  const std::size_t e = g.identity_index();

  for (std::size_t i = 0; i < n; ++i) {
    const auto left = g.product_index(e, i);
    const auto right = g.product_index(i, e);
    if ((left && *left != i) || (right && *right != i))
      report.violations.push_back({"identity", {i}});
    const auto inv = g.inverse_index(i);
    if (inv) {
      const auto prod = g.product_index(i, *inv);
      if (prod && *prod != e) report.violations.push_back({"inverse", {i}});
    }
  }

  const std::size_t total = n * n * n;
  const std::size_t stride = total > max_triples ? total / max_triples + 1 : 1;
  std::size_t counter = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (counter++ % stride != 0) continue;
        ++report.triples_checked;
        const auto xy = g.product_index(x, y);
        const auto yz = g.product_index(y, z);
        if (xy && yz) {
          const auto xy_z = g.product_index(*xy, z);
          const auto x_yz = g.product_index(x, *yz);
          if (xy_z && x_yz && *xy_z != *x_yz)
            report.violations.push_back({"associativity", {x, y, z}});
        }
        const auto xz = g.product_index(x, z);
        const auto zx = g.product_index(z, x);
        const auto zy = g.product_index(z, y);
        if (xz && yz && space.leq(x, y) != space.leq(*xz, *yz))
          report.violations.push_back({"translation", {x, y, z}});
        if (zx && zy && space.leq(x, y) != space.leq(*zx, *zy))
          report.violations.push_back({"translation", {x, y, z}});
      }
  report.valid = report.violations.empty();
  return report;
}

struct MinkowskiResult {
  SampledSet set;
  std::size_t dropped = 0;  // products clipped by the window
  bool clipped() const { return dropped > 0; }
};

// A * B = {ab : a in A, b in B}, restricted to the window. Dropped products
// are counted so callers can tell when a comparison is unsafe.
inline MinkowskiResult minkowski_product(const PoGroup& g, const SampledSet& a,
                                         const SampledSet& b) {
  MinkowskiResult out;
  std::vector<Point> pts;
  for (const auto& pa : a.points)
    for (const auto& pb : b.points) {
      Point prod = g.product(pa, pb);
      if (g.carrier().ctx().in_window(prod))
        pts.push_back(std::move(prod));
      else
        ++out.dropped;
    }
  out.set = metric::make_sampled_set(g.carrier().ctx(), std::move(pts), "minkowski");
  return out;
}

inline bool point_in_box(const Point& p, const std::vector<Interval>& box, double tol) {
  for (std::size_t k = 0; k < box.size(); ++k)
    if (p[k] < box[k].lo - tol || p[k] > box[k].hi + tol) return false;
  return true;
}

struct IdealProductReport {
  bool equal = false;
  std::vector<Point> only_in_product;   // inside the safe window
  std::vector<Point> only_in_ideal;
  std::size_t compared = 0;
};

// Asserts x-down * y-down = (xy)-down inside the safe window. The safe
// window is the caller's guarantee that no product relevant to the
// comparison was clipped by the carrier window.
inline IdealProductReport ideal_product_check(const PoGroup& g, std::size_t x, std::size_t y,
                                              const std::vector<Interval>& safe_window) {
  const auto& space = g.carrier();
  const double tol = space.ctx().tol();
  const auto xy = g.product_index(x, y);
  if (!xy) throw std::invalid_argument("ideal_product_check: xy is not a sample point");
  for (std::size_t i : {x, y, *xy})
    if (!point_in_box(space.point(i), safe_window, tol))
      throw std::invalid_argument("ideal_product_check: x, y, xy must lie in the safe window");

  const SampledSet ideal_x = embedding::canonical_ideal(space, x);
  const SampledSet ideal_y = embedding::canonical_ideal(space, y);
  const SampledSet ideal_xy = embedding::canonical_ideal(space, *xy);
  const auto prod = minkowski_product(g, ideal_x, ideal_y);

  IdealProductReport report;
  for (const auto& p : prod.set.points) {
    if (!point_in_box(p, safe_window, tol)) continue;
    ++report.compared;
    if (!metric::set_contains(space.ctx(), ideal_xy, p)) report.only_in_product.push_back(p);
  }
  for (const auto& p : ideal_xy.points) {
    if (!point_in_box(p, safe_window, tol)) continue;
    ++report.compared;
    if (!metric::set_contains(space.ctx(), prod.set, p)) report.only_in_ideal.push_back(p);
  }
  report.equal = report.only_in_product.empty() && report.only_in_ideal.empty();
  return report;
}

// --- Loewner order on Sym(n) ---

struct SymMatrix {
  std::size_t n = 0;
  std::vector<double> e;  // row-major

  double at(std::size_t i, std::size_t j) const { return e[i * n + j]; }
  double& at(std::size_t i, std::size_t j) { return e[i * n + j]; }

  static SymMatrix diag(std::vector<double> d) {
    SymMatrix m;
    m.n = d.size();
    m.e.assign(m.n * m.n, 0.0);
    for (std::size_t i = 0; i < m.n; ++i) m.at(i, i) = d[i];
    return m;
  }

  static SymMatrix from_rows(std::size_t n, std::vector<double> rows, double tol = 1e-9) {
    SymMatrix m;
    m.n = n;
    m.e = std::move(rows);
    if (m.e.size() != n * n) throw std::invalid_argument("SymMatrix: wrong entry count");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (std::abs(m.at(i, j) - m.at(j, i)) > tol)
          throw std::invalid_argument("SymMatrix: not symmetric");
    return m;
  }

  SymMatrix operator+(const SymMatrix& o) const {
    SymMatrix m = *this;
    for (std::size_t k = 0; k < e.size(); ++k) m.e[k] += o.e[k];
    return m;
  }

  SymMatrix operator-(const SymMatrix& o) const {
    SymMatrix m = *this;
    for (std::size_t k = 0; k < e.size(); ++k) m.e[k] -= o.e[k];
    return m;
  }
};

// Positive semidefiniteness by symmetric elimination with diagonal
// pivoting. The pivot threshold is tau = tol * (1 + max|entries|); a value
// at the threshold counts as nonnegative, so boundary cases resolve to
// "positive semidefinite". After elimination stalls, any residual diagonal
// below -tau or residual coupling above tau refutes semidefiniteness.
inline bool is_psd(const SymMatrix& m, double tol = 1e-9) {
  const std::size_t n = m.n;
  if (n == 0) return true;
  double max_abs = 0.0;
  for (double v : m.e) max_abs = std::max(max_abs, std::abs(v));
  const double tau = tol * (1.0 + max_abs);

  std::vector<double> a = m.e;
  std::vector<char> active(n, 1);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  for (;;) {
    std::size_t pivot = n;
    double best = tau;
    for (std::size_t i = 0; i < n; ++i)
      if (active[i] && at(i, i) > best) {
        best = at(i, i);
        pivot = i;
      }
    if (pivot == n) break;
    const double d = at(pivot, pivot);
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i] || i == pivot) continue;
      const double factor = at(i, pivot) / d;
      for (std::size_t j = 0; j < n; ++j)
        if (active[j] && j != pivot) at(i, j) -= factor * at(pivot, j);
    }
    active[pivot] = 0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!active[i]) continue;
    if (at(i, i) < -tau) return false;
    for (std::size_t j = 0; j < n; ++j)
      if (active[j] && j != i && std::abs(at(i, j)) > tau) return false;
  }
  return true;
}

// A <=_L B iff B - A is positive semidefinite.
inline bool loewner_leq(const SymMatrix& a, const SymMatrix& b, double tol = 1e-9) {
  if (a.n != b.n) throw std::invalid_argument("loewner_leq: dimension mismatch");
  return is_psd(b - a, tol);
}

struct AntilatticeReport {
  std::vector<std::size_t> lower_bounds;  // grid indices below both A and B
  std::vector<std::size_t> maximal;       // maximal elements of that set
  std::optional<std::size_t> greatest;
};

// Grid-relative evidence for the antilattice property: compute the common
// Loewner lower bounds of A and B inside the candidate grid and look for a
// greatest one. Incomparable A, B are expected to yield two or more maximal
// lower bounds and no greatest element; the report never claims more than
// "no greatest lower bound found in grid".
inline AntilatticeReport antilattice_probe(const SymMatrix& a, const SymMatrix& b,
                                           const std::vector<SymMatrix>& grid, double tol = 1e-9) {
  if (grid.empty()) throw std::invalid_argument("antilattice_probe: empty grid");
  AntilatticeReport report;
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (loewner_leq(grid[i], a, tol) && loewner_leq(grid[i], b, tol))
      report.lower_bounds.push_back(i);
  for (std::size_t i : report.lower_bounds) {
    bool maximal = true;
    for (std::size_t j : report.lower_bounds) {
      if (i == j) continue;
      if (loewner_leq(grid[i], grid[j], tol) && !loewner_leq(grid[j], grid[i], tol)) {
        maximal = false;
        break;
      }
    }
    if (maximal) report.maximal.push_back(i);
  }
  for (std::size_t g : report.lower_bounds) {
    bool greatest = true;
    for (std::size_t z : report.lower_bounds)
      if (!loewner_leq(grid[z], grid[g], tol)) { greatest = false; break; }
    if (greatest) {
      report.greatest = g;
      break;
    }
  }
  return report;
}

}  // namespace hyperlat::pogroup

#endif  // HYPERLAT_POGROUP_HPP_
