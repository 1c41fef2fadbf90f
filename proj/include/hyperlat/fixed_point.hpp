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

#ifndef HYPERLAT_FIXED_POINT_HPP_
#define HYPERLAT_FIXED_POINT_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperlat/embedding.hpp"

// The topological Tarski-Kantorovich iteration and its order-theoretic
// oracles, plus filtered-infimum preservation checks.
namespace hyperlat::fixpt {

using embedding::SampledMetricPoset;
using metric::Point;

// Self-maps are index tables on the carrier sample.
struct MapOnSample {
  std::vector<std::size_t> table;
  std::string name;

  std::size_t operator()(std::size_t i) const { return table.at(i); }
};

namespace detail {

// Snap a target point to the nearest sample point; equidistant candidates
// resolve to the lexicographically smaller one (so 2.5 on an integer chain
// snaps to 2).
inline std::size_t snap(const SampledMetricPoset& space, const Point& target) {
  std::size_t best = 0;
  double best_d = space.ctx().dist(target, space.point(0));
  for (std::size_t i = 1; i < space.size(); ++i) {
    const double d = space.ctx().dist(target, space.point(i));
    if (d < best_d ||
        (d == best_d && metric::lex_less(space.point(i), space.point(best)))) {
      best = i;
      best_d = d;
    }
  }
  return best;
}

}  // namespace detail

inline MapOnSample identity_map(const SampledMetricPoset& space) {
  MapOnSample f;
  f.name = "identity";
  f.table.resize(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) f.table[i] = i;
  return f;
}

// f(x) = clamp(a*x + b, lo, hi) componentwise, snapped to the sample.
inline MapOnSample affine_clamp_map(const SampledMetricPoset& space, double a, double b,
                                    double lo, double hi) {
  MapOnSample f;
  f.name = "affine-clamp";
  f.table.resize(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    Point t = space.point(i);
    for (double& c : t) c = std::clamp(a * c + b, lo, hi);
    f.table[i] = detail::snap(space, t);
  }
  return f;
}

// f(x) = componentwise min(x, c), snapped to the sample.
inline MapOnSample min_with_const_map(const SampledMetricPoset& space, const Point& c) {
  MapOnSample f;
  f.name = "min-with-const";
  f.table.resize(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    Point t = space.point(i);
    for (std::size_t k = 0; k < t.size(); ++k) t[k] = std::min(t[k], c.at(k));
    f.table[i] = detail::snap(space, t);
  }
  return f;
}

inline std::optional<std::pair<std::size_t, std::size_t>> order_preservation_witness(
    const SampledMetricPoset& space, const MapOnSample& f) {
  for (std::size_t x = 0; x < space.size(); ++x)
    for (std::size_t y = 0; y < space.size(); ++y)
      if (space.leq(x, y) && !space.leq(f(x), f(y))) return std::make_pair(x, y);
  return std::nullopt;
}

struct IterationTrace {
  std::vector<std::size_t> states;  // x_1 = x0, x_2 = f(x_1), ...
  bool converged = false;
  std::optional<std::size_t> fixed_point;
  std::size_t steps = 0;  // number of applications of f
};

// Iterates x_{n+1} = f(x_n) from a deflation point. Preconditions are
// checked exhaustively first: f total on the sample, order-preserving, and
// f(x0) <= x0, so the trace is <=-decreasing. Convergence is exact index
// equality on discrete samples and tol-based otherwise; running out of
// max_steps returns a non-converged trace, not an error.
inline IterationTrace tk_iterate(const SampledMetricPoset& space, const MapOnSample& f,
                                 std::size_t x0, std::size_t max_steps = 10000) {
  if (f.table.size() != space.size())
    throw std::invalid_argument("tk_iterate: map is not total on the sample");
  for (std::size_t v : f.table)
    if (v >= space.size()) throw std::invalid_argument("tk_iterate: map leaves the sample");
  if (auto w = order_preservation_witness(space, f))
    throw std::invalid_argument("tk_iterate: map is not order-preserving; witness pair " +
                                std::to_string(w->first) + "," + std::to_string(w->second));
  if (!space.leq(f(x0), x0))
    throw std::invalid_argument("tk_iterate: f(x0) is not below x0");

  IterationTrace trace;
  trace.states.push_back(x0);
  std::size_t cur = x0;
  for (std::size_t step = 0; step < max_steps; ++step) {
    const std::size_t next = f(cur);
    trace.states.push_back(next);
    ++trace.steps;
    const bool same = space.discrete()
                          ? next == cur
                          : space.ctx().dist(space.point(next), space.point(cur)) <= space.ctx().tol();
    if (same) {
      trace.converged = true;
      trace.fixed_point = next;
      return trace;
    }
    cur = next;
  }
  return trace;
}

// Oracle: exhaustive scan for f(x) = x.
inline std::vector<std::size_t> brute_force_fixed_points(const MapOnSample& f) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < f.table.size(); ++i)
    if (f.table[i] == i) out.push_back(i);
  return out;
}

// Brute-force meet of two sample indices under the space order (the
// order-core search specialized to spaces); the oracle for closed-form
// meet rules.
inline std::optional<std::size_t> brute_meet(const SampledMetricPoset& space, std::size_t a,
                                             std::size_t b) {
  std::vector<std::size_t> lower;
  for (std::size_t z = 0; z < space.size(); ++z)
    if (space.leq(z, a) && space.leq(z, b)) lower.push_back(z);
  for (std::size_t g : lower) {
    bool greatest = true;
    for (std::size_t z : lower)
      if (!space.leq(z, g)) { greatest = false; break; }
    if (greatest) return g;
  }
  return std::nullopt;
}

inline std::optional<std::size_t> brute_big_meet(const SampledMetricPoset& space,
                                                 const std::vector<std::size_t>& subset) {
  if (subset.empty()) throw std::invalid_argument("brute_big_meet of empty subset");
  std::vector<std::size_t> lower;
  for (std::size_t z = 0; z < space.size(); ++z) {
    bool below_all = true;
    for (std::size_t s : subset)
      if (!space.leq(z, s)) { below_all = false; break; }
    if (below_all) lower.push_back(z);
  }
  for (std::size_t g : lower) {
    bool greatest = true;
    for (std::size_t z : lower)
      if (!space.leq(z, g)) { greatest = false; break; }
    if (greatest) return g;
  }
  return std::nullopt;
}

// A map between two spaces, as an index table from A's sample to B's.
struct CrossMap {
  std::vector<std::size_t> table;
  std::string name;

  std::size_t operator()(std::size_t i) const { return table.at(i); }
};

struct HomViolation {
  std::size_t x = 0, y = 0;
  std::size_t f_of_meet = 0;
  std::size_t meet_of_f = 0;
};

struct InfComparison {
  bool filtered = false;
  std::optional<std::pair<std::size_t, std::size_t>> unfiltered_witness;

  std::optional<std::size_t> inf_s;   // index in A's sample
  bool inf_s_declared = false;
  std::optional<std::size_t> inf_fs;  // index in B's sample
  bool inf_fs_declared = false;
  std::optional<std::size_t> f_of_inf;

  // Defined only when both sides exist.
  enum class Equality { Equal, Unequal, Undefined } equality = Equality::Undefined;

  std::size_t hom_pairs_checked = 0;
  std::vector<HomViolation> hom_violations;
};

// Does f carry the infimum of S to the infimum of f(S)? Reports (i) whether
// S is filtered, (ii) whether both infima exist on the samples (a missing
// meet is "undefined", not an error), and (iii) whether f(inf S) equals
// inf f(S). Infinite-flavored scenarios may declare either infimum instead
// of computing it; declared values are marked in the report. Also runs the
// meet-homomorphism variant f(x ^ y) = f(x) ^ f(y) over all pairs of S
// where both meets exist.
inline InfComparison filtered_inf_check(const SampledMetricPoset& space_a,
                                        const SampledMetricPoset& space_b, const CrossMap& f,
                                        const std::vector<std::size_t>& subset,
                                        std::optional<std::size_t> declared_inf_a = std::nullopt,
                                        std::optional<std::size_t> declared_inf_b = std::nullopt) {
  if (subset.empty()) throw std::invalid_argument("filtered_inf_check: empty subset");
  if (f.table.size() != space_a.size())
    throw std::invalid_argument("filtered_inf_check: map is not total on the domain sample");
  for (std::size_t v : f.table)
    if (v >= space_b.size())
      throw std::invalid_argument("filtered_inf_check: map leaves the codomain sample");
  for (std::size_t x = 0; x < space_a.size(); ++x)
    for (std::size_t y = 0; y < space_a.size(); ++y)
      if (space_a.leq(x, y) && !space_b.leq(f(x), f(y)))
        throw std::invalid_argument("filtered_inf_check: map is not order-preserving; witness " +
                                    std::to_string(x) + "," + std::to_string(y));

  InfComparison out;
  out.filtered = true;
  for (std::size_t i = 0; i < subset.size() && out.filtered; ++i)
    for (std::size_t j = i; j < subset.size(); ++j) {
      bool has_bound = false;
      for (std::size_t z : subset)
        if (space_a.leq(z, subset[i]) && space_a.leq(z, subset[j])) { has_bound = true; break; }
      if (!has_bound) {
        out.filtered = false;
        out.unfiltered_witness = std::make_pair(subset[i], subset[j]);
        break;
      }
    }

  if (declared_inf_a) {
    out.inf_s = declared_inf_a;
    out.inf_s_declared = true;
  } else {
    out.inf_s = brute_big_meet(space_a, subset);
  }
  std::vector<std::size_t> image;
  for (std::size_t s : subset) image.push_back(f(s));
  if (declared_inf_b) {
    out.inf_fs = declared_inf_b;
    out.inf_fs_declared = true;
  } else {
    out.inf_fs = brute_big_meet(space_b, image);
  }
  if (out.inf_s) out.f_of_inf = f(*out.inf_s);
  if (out.f_of_inf && out.inf_fs) {
    const bool eq = *out.f_of_inf == *out.inf_fs ||
                    space_b.ctx().dist(space_b.point(*out.f_of_inf),
                                       space_b.point(*out.inf_fs)) <= space_b.ctx().tol();
    out.equality = eq ? InfComparison::Equality::Equal : InfComparison::Equality::Unequal;
  }

  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      const auto ma = brute_meet(space_a, subset[i], subset[j]);
      if (!ma) continue;
      const auto mb = brute_meet(space_b, f(subset[i]), f(subset[j]));
      if (!mb) continue;
      ++out.hom_pairs_checked;
      if (f(*ma) != *mb)
        out.hom_violations.push_back({subset[i], subset[j], f(*ma), *mb});
    }
  return out;
}

}  // namespace hyperlat::fixpt

#endif  // HYPERLAT_FIXED_POINT_HPP_
