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

#ifndef HYPERLAT_HYPERSPACE_HPP_
#define HYPERLAT_HYPERSPACE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperlat/metric_sets.hpp"

// Hit-and-miss (Fell) neighborhoods with exact closed-form membership, and
// Kuratowski-Painleve sequence convergence checking at a finite horizon.
namespace hyperlat::fell {

using metric::MetricContext;
using metric::Point;
using metric::SampledSet;

// Hit/miss geometry. Membership is decided by exact arithmetic on the
// closed-form description, never by sampling, so a miss verdict cannot be
// an artifact of set density. Closed kinds are compact (bounded by
// construction inside the window).
struct Region {
  enum class Kind { OpenBall, ClosedBall, OpenBox, ClosedBox, Union };

  Kind kind = Kind::OpenBall;
  Point center;                          // balls
  double radius = 0.0;                   // balls
  std::vector<metric::Interval> bounds;  // boxes
  std::vector<Region> parts;             // unions

  static Region open_ball(Point c, double r) { return {Kind::OpenBall, std::move(c), r, {}, {}}; }
  static Region closed_ball(Point c, double r) { return {Kind::ClosedBall, std::move(c), r, {}, {}}; }
  static Region open_box(std::vector<metric::Interval> b) { return {Kind::OpenBox, {}, 0.0, std::move(b), {}}; }
  static Region closed_box(std::vector<metric::Interval> b) { return {Kind::ClosedBox, {}, 0.0, std::move(b), {}}; }
  static Region union_of(std::vector<Region> rs) { return {Kind::Union, {}, 0.0, {}, std::move(rs)}; }

  bool contains(const MetricContext& ctx, const Point& p) const {
    switch (kind) {
      case Kind::OpenBall:
        return ctx.dist(p, center) < radius;
      case Kind::ClosedBall:
        return ctx.dist(p, center) <= radius;
      case Kind::OpenBox:
        for (std::size_t k = 0; k < bounds.size(); ++k)
          if (!(p[k] > bounds[k].lo && p[k] < bounds[k].hi)) return false;
        return true;
      case Kind::ClosedBox:
        for (std::size_t k = 0; k < bounds.size(); ++k)
          if (!(p[k] >= bounds[k].lo && p[k] <= bounds[k].hi)) return false;
        return true;
      case Kind::Union:
        for (const auto& r : parts)
          if (r.contains(ctx, p)) return true;
        return false;
    }
    return false;
  }

  bool is_compact_kind() const {
    switch (kind) {
      case Kind::ClosedBall:
      case Kind::ClosedBox:
        return true;
      case Kind::Union:
        return std::all_of(parts.begin(), parts.end(),
                           [](const Region& r) { return r.is_compact_kind(); });
      default:
        return false;
    }
  }
};

// Finitely many open "hit" regions plus at most one compact "miss" region.
struct FellNbhd {
  std::vector<Region> hits;
  std::optional<Region> miss;
};

struct FellMembership {
  bool member = false;
  std::vector<char> hit_met;  // one flag per hit region
  bool miss_avoided = true;
};

// A is in the neighborhood iff some sample point lies in every hit region
// and no sample point lies in the miss region.
inline FellMembership fell_membership(const MetricContext& ctx, const SampledSet& a,
                                      const FellNbhd& nbhd) {
  if (nbhd.miss && !nbhd.miss->is_compact_kind())
    throw std::invalid_argument("fell_membership: miss region must be compact-kinded");
  FellMembership out;
  out.hit_met.assign(nbhd.hits.size(), 0);
  for (std::size_t i = 0; i < nbhd.hits.size(); ++i)
    for (const auto& p : a.points)
      if (nbhd.hits[i].contains(ctx, p)) { out.hit_met[i] = 1; break; }
  if (nbhd.miss)
    for (const auto& p : a.points)
      if (nbhd.miss->contains(ctx, p)) { out.miss_avoided = false; break; }
  out.member = out.miss_avoided &&
               std::all_of(out.hit_met.begin(), out.hit_met.end(), [](char c) { return c != 0; });
  return out;
}

// An indexed sequence of sampled sets sharing one context; index n runs
// 1..N where N = terms.size() is the horizon.
struct SetSequence {
  std::vector<SampledSet> terms;

  std::size_t horizon() const { return terms.size(); }
  const SampledSet& at(std::size_t n) const { return terms.at(n - 1); }  // 1-based
};

struct KPParams {
  std::vector<double> radii;     // strictly decreasing test radii
  std::size_t pool_budget = 0;   // 0 = unbounded; caps the upper-limit point pool
};

// Default test radii: geometric, r_j = (diameter/4) * 2^-j for j = 0..6.
inline std::vector<double> default_radii(const MetricContext& ctx) {
  std::vector<double> r;
  double v = ctx.window_diameter() / 4.0;
  for (int j = 0; j <= 6; ++j) {
    r.push_back(v);
    v /= 2.0;
  }
  return r;
}

struct LowerFailure {
  Point limit_point;            // the candidate point that is not attained
  double radius;                // the ball that A_n keeps missing
  std::vector<std::size_t> missing;  // every index n with d(a, A_n) >= radius
};

struct UpperFlag {
  Point escape_point;       // persistent point farther than the slack from the candidate
  double escape_distance;   // d(p, candidate)
  std::vector<std::size_t> witness_indices;  // one per radius block: a hitting index
  std::vector<Point> witness_points;         // nearest set points at those indices
};

struct KPVerdict {
  bool lower_ok = false;
  bool upper_ok = false;
  std::vector<LowerFailure> lower_witnesses;
  std::vector<UpperFlag> upper_witnesses;
  std::string horizon_note;
};

namespace detail {

// Block thresholds for the upper check: with J+1 radii the index range
// [1..N] is cut into J+2 chunks; block j (j = 0..J) starts at
// t_j = 1 + floor(N*(j+1)/(J+2)). Indices before t_0 are the unconstrained
// prefix (a convergent selection may be wild early on).
inline std::vector<std::size_t> block_starts(std::size_t horizon, std::size_t nradii) {
  std::vector<std::size_t> t(nradii);
  for (std::size_t j = 0; j < nradii; ++j)
    t[j] = 1 + (horizon * (j + 1)) / (nradii + 1);
  return t;
}

}  // namespace detail

// Kuratowski-Painleve convergence check, truncated at the sequence horizon.
//
// Lower clause (every candidate point attained): for each point a of the
// candidate and each test radius r, the terms A_n must meet the open ball
// B(a, r) for all n from some threshold N(r) <= horizon onward. A threshold
// exists iff the final term hits, and the failure witness lists every
// missing index. A failure here is conclusive: the candidate point is
// visibly not attained up to the horizon.
//
// Upper clause (no selection escapes): the infinite definition quantifies
// over all convergent subsequential selections, which no finite procedure
// can certify positively. The horizon surrogate: split [1..horizon] into
// one index block per radius (coarse radii early, fine radii late, see
// block_starts). A pool point p — pool = all points of all terms — is
// flagged as an escape iff
//   (1) d(p, candidate) > tol + 2*r_min  (the limit of a selection funneling
//       through the radius schedule is localized only to within r_min of p,
//       hence the slack),
//   (2) every nonempty block j contains an index n with d(p, A_n) < r_j, and
//   (3) d(p, A_horizon) < r_min (the selection is anchored at the horizon).
// This is exactly the existence of a selection a_{n_k} in A_{n_k}, one index
// per block plus the anchor, whose terms funnel into p. Flags are
// horizon-bounded evidence, not proof: a pattern visible up to N may still
// break at N+1, which is why positive verdicts carry horizon_note and why
// scenario spaces may declare an analytic waiver for upper flags.
inline KPVerdict kp_check(const MetricContext& ctx, const SetSequence& seq,
                          const SampledSet& candidate, const KPParams& params) {
  if (seq.terms.empty()) throw std::invalid_argument("kp_check: empty sequence");
  const auto& radii = params.radii;
  if (radii.empty()) throw std::invalid_argument("kp_check: empty ball_radii");
  for (std::size_t j = 1; j < radii.size(); ++j)
    if (!(radii[j] < radii[j - 1]))
      throw std::invalid_argument("kp_check: ball_radii must be strictly decreasing");

  const std::size_t N = seq.horizon();
  const double r_min = radii.back();
  KPVerdict out;
  out.horizon_note = "consistent up to horizon " + std::to_string(N) +
                     "; failure witnesses are conclusive, passes are not proofs";

  // Lower clause.
  out.lower_ok = true;
  for (const auto& a : candidate.points) {
    for (double r : radii) {
      std::vector<std::size_t> missing;
      for (std::size_t n = 1; n <= N; ++n)
        if (metric::dist_point_set(ctx, a, seq.at(n)) >= r) missing.push_back(n);
      if (!missing.empty() && missing.back() == N) {
        out.lower_ok = false;
        out.lower_witnesses.push_back({a, r, std::move(missing)});
      }
    }
  }

  // Upper clause.
  out.upper_ok = true;
  const auto starts = detail::block_starts(N, radii.size());
  std::vector<Point> pool;
  for (const auto& term : seq.terms)
    for (const auto& p : term.points) {
      bool seen = false;
      for (const auto& q : pool)
        if (ctx.dist(p, q) <= ctx.tol()) { seen = true; break; }
      if (!seen) pool.push_back(p);
    }
  std::size_t examined = 0;
  for (const auto& p : pool) {
    if (params.pool_budget && examined++ >= params.pool_budget) break;
    const double escape = metric::dist_point_set(ctx, p, candidate);
    if (!(escape > ctx.tol() + 2.0 * r_min)) continue;
    if (!(metric::dist_point_set(ctx, p, seq.at(N)) < r_min)) continue;
    bool covered = true;
    UpperFlag flag;
    flag.escape_point = p;
    flag.escape_distance = escape;
    for (std::size_t j = 0; j < radii.size() && covered; ++j) {
      const std::size_t lo = starts[j];
      const std::size_t hi = (j + 1 < radii.size()) ? starts[j + 1] - 1 : N;
      if (lo > hi) continue;  // empty block: vacuously covered
      bool hit = false;
      for (std::size_t n = lo; n <= hi; ++n) {
        if (metric::dist_point_set(ctx, p, seq.at(n)) < radii[j]) {
          // record the nearest set point as the selection witness
          const auto& term = seq.at(n);
          Point best = term.points.front();
          for (const auto& q : term.points)
            if (ctx.dist(p, q) < ctx.dist(p, best)) best = q;
          flag.witness_indices.push_back(n);
          flag.witness_points.push_back(best);
          hit = true;
          break;
        }
      }
      covered = hit;
    }
    if (covered) {
      out.upper_ok = false;
      out.upper_witnesses.push_back(std::move(flag));
    }
  }
  return out;
}

enum class Monotonicity { Decreasing, Increasing };

struct MonotoneLimit {
  SampledSet limit;
  Monotonicity direction = Monotonicity::Decreasing;
  bool essentially = false;  // true when only the eventual-domination form holds
  KPVerdict kp;
  bool kp_ok = false;
};

// Limit of a monotone sequence: the exact sample intersection for
// (essentially) decreasing sequences, the union for increasing ones. The
// result is re-checked against kp_check and the verdict is returned
// alongside. Sequences that are neither are a precondition error naming
// the first offending index.
inline MonotoneLimit monotone_limit(const MetricContext& ctx, const SetSequence& seq,
                                    const KPParams& params) {
  if (seq.terms.empty()) throw std::invalid_argument("monotone_limit: empty sequence");
  const std::size_t N = seq.horizon();

  bool decreasing = true, increasing = true;
  std::size_t first_bad_dec = 0, first_bad_inc = 0;
  for (std::size_t n = 1; n < N; ++n) {
    if (decreasing && !metric::subset_of(ctx, seq.at(n + 1), seq.at(n))) {
      decreasing = false;
      first_bad_dec = n + 1;
    }
    if (increasing && !metric::subset_of(ctx, seq.at(n), seq.at(n + 1))) {
      increasing = false;
      first_bad_inc = n + 1;
    }
  }
  // Essentially decreasing at the horizon: the final term sits inside
  // every earlier one.
  bool essentially_dec = true;
  for (std::size_t n = 1; n <= N && essentially_dec; ++n)
    essentially_dec = metric::subset_of(ctx, seq.at(N), seq.at(n));

  MonotoneLimit out;
  if (decreasing || (!increasing && essentially_dec)) {
    out.direction = Monotonicity::Decreasing;
    out.essentially = !decreasing;
    SampledSet acc = seq.at(N);
    for (std::size_t n = 1; n < N; ++n) acc = metric::intersect(ctx, acc, seq.at(n));
    acc.label = "limit(intersection)";
    out.limit = std::move(acc);
  } else if (increasing) {
    out.direction = Monotonicity::Increasing;
    SampledSet acc = seq.at(1);
    for (std::size_t n = 2; n <= N; ++n) acc = metric::unite(ctx, acc, seq.at(n));
    acc.label = "limit(union)";
    out.limit = std::move(acc);
  } else {
    throw std::invalid_argument(
        "monotone_limit: sequence is neither decreasing nor increasing; first offending index " +
        std::to_string(std::min(first_bad_dec, first_bad_inc)));
  }
  out.kp = kp_check(ctx, seq, out.limit, params);
  out.kp_ok = out.kp.lower_ok && out.kp.upper_ok;
  return out;
}

struct InclusionCheck {
  bool pass = false;
  std::optional<Point> escaping_point;  // a point of limitA that left limitB
  KPVerdict kp_a;
  KPVerdict kp_b;
};

// Inclusion is closed under Fell limits on locally compact desk instances:
// A_n subset of B_n for all n and both sequences converging forces
// limitA subset of limitB. A failure signals a sampling bug, not new math.
inline InclusionCheck inclusion_preservation_check(const MetricContext& ctx,
                                                   const SetSequence& seq_a,
                                                   const SetSequence& seq_b,
                                                   const SampledSet& limit_a,
                                                   const SampledSet& limit_b,
                                                   const KPParams& params) {
  if (seq_a.horizon() != seq_b.horizon())
    throw std::invalid_argument("inclusion_preservation_check: horizon mismatch");
  for (std::size_t n = 1; n <= seq_a.horizon(); ++n)
    if (!metric::subset_of(ctx, seq_a.at(n), seq_b.at(n)))
      throw std::invalid_argument(
          "inclusion_preservation_check: A_n not a subset of B_n at index " + std::to_string(n));
  InclusionCheck out;
  out.kp_a = kp_check(ctx, seq_a, limit_a, params);
  out.kp_b = kp_check(ctx, seq_b, limit_b, params);
  if (!(out.kp_a.lower_ok && out.kp_a.upper_ok))
    throw std::invalid_argument("inclusion_preservation_check: kp_check fails for the A sequence");
  if (!(out.kp_b.lower_ok && out.kp_b.upper_ok))
    throw std::invalid_argument("inclusion_preservation_check: kp_check fails for the B sequence");
  out.pass = true;
  for (const auto& p : limit_a.points)
    if (!metric::set_contains(ctx, limit_b, p)) {
      out.pass = false;
      out.escaping_point = p;
      break;
    }
  return out;
}

struct ConvexityVerdict {
  bool pass = false;
  bool vacuous = false;       // A or B was outside the neighborhood
  std::string violated_clause;  // "hit-region k" | "miss-region" when violated
};

// Basic Fell neighborhoods are order-convex for inclusion: if A and B lie
// in a hit-and-miss neighborhood and A subset C subset B, then C does too.
// Used as a law test; a violation is impossible and fails the build.
inline ConvexityVerdict fell_basic_convexity(const MetricContext& ctx, const FellNbhd& nbhd,
                                             const SampledSet& a, const SampledSet& c,
                                             const SampledSet& b) {
  if (!metric::subset_of(ctx, a, c) || !metric::subset_of(ctx, c, b))
    throw std::invalid_argument("fell_basic_convexity: requires A subset C subset B");
  const auto ma = fell_membership(ctx, a, nbhd);
  const auto mb = fell_membership(ctx, b, nbhd);
  ConvexityVerdict out;
  if (!ma.member || !mb.member) {
    out.pass = true;
    out.vacuous = true;
    return out;
  }
  const auto mc = fell_membership(ctx, c, nbhd);
  if (mc.member) {
    out.pass = true;
    return out;
  }
  for (std::size_t i = 0; i < mc.hit_met.size(); ++i)
    if (!mc.hit_met[i]) { out.violated_clause = "hit-region " + std::to_string(i); break; }
  if (out.violated_clause.empty() && !mc.miss_avoided) out.violated_clause = "miss-region";
  return out;
}

}  // namespace hyperlat::fell

#endif  // HYPERLAT_HYPERSPACE_HPP_
