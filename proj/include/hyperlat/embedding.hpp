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

#ifndef HYPERLAT_EMBEDDING_HPP_
#define HYPERLAT_EMBEDDING_HPP_

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperlat/hyperspace.hpp"
#include "hyperlat/metric_sets.hpp"

// The canonical embedding x -> x-down over sampled metric posets, with
// forward/inverse continuity probes, order-closedness and order-connectedness
// probes, and the radially convex remetrization D(x,y) = rho_d(x-down, y-down).
namespace hyperlat::embedding {

using fell::FellNbhd;
using fell::KPParams;
using fell::KPVerdict;
using fell::Region;
using fell::SetSequence;
using metric::MetricContext;
using metric::Point;
using metric::SampledSet;

enum class LeqRuleKind { Coordinatewise, CustomPairs, NamedPredicate };
enum class LatticeRuleKind { None, CoordinatewiseMin, CoordinatewiseMax, Custom };

struct SpaceFlags {
  bool semilattice = false;
  bool lattice = false;
  bool locally_compact = false;
  bool order_connected = false;
  std::string justification;
  // Analytic waiver for horizon-bounded upper K-P flags (spaces whose
  // escaping selections converge outside the carrier). Empty = strict.
  std::string kp_upper_waiver;
};

// Carrier sample + distance rule + order predicate, the desk-scale stand-in
// for a topological poset. The order restricted to the sample is validated
// as a partial order on construction; a closed-form meet/join, when given,
// is verified to satisfy the greatest-lower/least-upper-bound property on
// every sampled pair.
class SampledMetricPoset {
 public:
  using Predicate = std::function<bool(const Point&, const Point&)>;
  using BinaryOp = std::function<Point(const Point&, const Point&)>;

  SampledMetricPoset(MetricContext ctx, SampledSet sample, LeqRuleKind kind,
                     std::string rule_name, Predicate predicate,
                     std::vector<std::pair<std::size_t, std::size_t>> pairs = {})
      : ctx_(std::move(ctx)),
        sample_(std::move(sample)),
        rule_kind_(kind),
        rule_name_(std::move(rule_name)) {
    const std::size_t n = sample_.size();
    if (n == 0) throw std::invalid_argument("space: carrier sample is empty");
    leq_.assign(n * n, 0);
    switch (rule_kind_) {
      case LeqRuleKind::Coordinatewise:
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            leq_[i * n + j] = coordinatewise_leq(sample_.points[i], sample_.points[j]) ? 1 : 0;
        break;
      case LeqRuleKind::CustomPairs:
        for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = 1;
        for (auto [a, b] : pairs) {
          if (a >= n || b >= n) throw std::invalid_argument("space: pair index out of range");
          leq_[a * n + b] = 1;
        }
        break;
      case LeqRuleKind::NamedPredicate:
        if (!predicate) throw std::invalid_argument("space: missing predicate " + rule_name_);
        predicate_ = std::move(predicate);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            leq_[i * n + j] = predicate_(sample_.points[i], sample_.points[j]) ? 1 : 0;
        break;
    }
    validate_axioms();
  }

  static SampledMetricPoset coordinatewise(MetricContext ctx, SampledSet sample) {
    return SampledMetricPoset(std::move(ctx), std::move(sample), LeqRuleKind::Coordinatewise,
                              "coordinatewise", nullptr);
  }

  const MetricContext& ctx() const { return ctx_; }
  const SampledSet& sample() const { return sample_; }
  std::size_t size() const { return sample_.size(); }
  const Point& point(std::size_t i) const { return sample_.points[i]; }
  const std::string& rule_name() const { return rule_name_; }
  LeqRuleKind rule_kind() const { return rule_kind_; }

  bool leq(std::size_t i, std::size_t j) const { return leq_[i * size() + j] != 0; }

  std::size_t index_of(const Point& p) const {
    for (std::size_t i = 0; i < size(); ++i)
      if (ctx_.dist(p, sample_.points[i]) <= ctx_.tol()) return i;
    throw std::invalid_argument("point is not in the carrier sample");
  }

  SpaceFlags& flags() { return flags_; }
  const SpaceFlags& flags() const { return flags_; }

  void set_discrete(bool d) { discrete_ = d; }
  bool discrete() const { return discrete_ || ctx_.is_table(); }

  // Installs a closed-form meet and verifies the glb property on every
  // sampled pair where the closed form lands in the sample: m <= a, m <= b,
  // and every sampled common lower bound z satisfies z <= m.
  void set_meet_rule(LatticeRuleKind kind, BinaryOp op = nullptr) {
    meet_kind_ = kind;
    meet_fn_ = resolve(kind, std::move(op), /*is_meet=*/true);
    if (meet_kind_ != LatticeRuleKind::None) verify_bound_rule(true);
  }

  void set_join_rule(LatticeRuleKind kind, BinaryOp op = nullptr) {
    join_kind_ = kind;
    join_fn_ = resolve(kind, std::move(op), /*is_meet=*/false);
    if (join_kind_ != LatticeRuleKind::None) verify_bound_rule(false);
  }

  bool has_meet_rule() const { return meet_kind_ != LatticeRuleKind::None; }
  bool has_join_rule() const { return join_kind_ != LatticeRuleKind::None; }
  LatticeRuleKind meet_kind() const { return meet_kind_; }
  LatticeRuleKind join_kind() const { return join_kind_; }

  std::size_t meet(std::size_t i, std::size_t j) const {
    if (!has_meet_rule()) throw std::logic_error("space has no meet rule");
    return index_of(meet_fn_(point(i), point(j)));
  }

  std::size_t join(std::size_t i, std::size_t j) const {
    if (!has_join_rule()) throw std::logic_error("space has no join rule");
    return index_of(join_fn_(point(i), point(j)));
  }

 private:
  static bool coordinatewise_leq(const Point& a, const Point& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
      if (!(a[k] <= b[k])) return false;
    return true;
  }

  BinaryOp resolve(LatticeRuleKind kind, BinaryOp op, bool is_meet) {
    switch (kind) {
      case LatticeRuleKind::None:
        return nullptr;
      case LatticeRuleKind::CoordinatewiseMin:
      case LatticeRuleKind::CoordinatewiseMax: {
        const bool take_min = (kind == LatticeRuleKind::CoordinatewiseMin);
        return [take_min](const Point& a, const Point& b) {
          Point out(a.size());
          for (std::size_t k = 0; k < a.size(); ++k)
            out[k] = take_min ? std::min(a[k], b[k]) : std::max(a[k], b[k]);
          return out;
        };
      }
      case LatticeRuleKind::Custom:
        if (!op) throw std::invalid_argument(is_meet ? "missing meet op" : "missing join op");
        return op;
    }
    return nullptr;
  }

  void validate_axioms() const {
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i)
      if (!leq(i, i)) throw std::invalid_argument("space order: not reflexive at sample index " +
                                                  std::to_string(i));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (leq(i, j) && leq(j, i))
          throw std::invalid_argument("space order: antisymmetry fails at indices " +
                                      std::to_string(i) + "," + std::to_string(j));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!leq(i, j)) continue;
        for (std::size_t k = 0; k < n; ++k)
          if (leq(j, k) && !leq(i, k))
            throw std::invalid_argument("space order: transitivity fails at indices " +
                                        std::to_string(i) + "," + std::to_string(j) + "," +
                                        std::to_string(k));
      }
  }

  void verify_bound_rule(bool is_meet) const {
    const std::size_t n = size();
    const auto& fn = is_meet ? meet_fn_ : join_fn_;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        const Point m = fn(point(i), point(j));
        std::size_t mi;
        try {
          mi = index_of(m);
        } catch (const std::invalid_argument&) {
          throw std::invalid_argument("closed-form " + std::string(is_meet ? "meet" : "join") +
                                      " leaves the sample at pair " + std::to_string(i) + "," +
                                      std::to_string(j));
        }
        const bool bounds = is_meet ? (leq(mi, i) && leq(mi, j)) : (leq(i, mi) && leq(j, mi));
        if (!bounds)
          throw std::invalid_argument("closed-form rule is not a bound at pair " +
                                      std::to_string(i) + "," + std::to_string(j));
        for (std::size_t z = 0; z < n; ++z) {
          const bool common = is_meet ? (leq(z, i) && leq(z, j)) : (leq(i, z) && leq(j, z));
          const bool dominated = is_meet ? leq(z, mi) : leq(mi, z);
          if (common && !dominated)
            throw std::invalid_argument("closed-form rule is not the greatest/least bound at pair " +
                                        std::to_string(i) + "," + std::to_string(j));
        }
      }
  }

  MetricContext ctx_;
  SampledSet sample_;
  LeqRuleKind rule_kind_;
  std::string rule_name_;
  Predicate predicate_;
  std::vector<char> leq_;
  LatticeRuleKind meet_kind_ = LatticeRuleKind::None;
  LatticeRuleKind join_kind_ = LatticeRuleKind::None;
  BinaryOp meet_fn_;
  BinaryOp join_fn_;
  SpaceFlags flags_;
  bool discrete_ = false;
};

// {z in sample : z <= x}; always contains x itself.
inline SampledSet canonical_ideal(const SampledMetricPoset& space, std::size_t x) {
  if (x >= space.size()) throw std::invalid_argument("canonical_ideal: index out of range");
  std::vector<Point> pts;
  for (std::size_t z = 0; z < space.size(); ++z)
    if (space.leq(z, x)) pts.push_back(space.point(z));
  return metric::make_sampled_set(space.ctx(), std::move(pts), "ideal");
}

inline SampledSet canonical_filter(const SampledMetricPoset& space, std::size_t x) {
  std::vector<Point> pts;
  for (std::size_t z = 0; z < space.size(); ++z)
    if (space.leq(x, z)) pts.push_back(space.point(z));
  return metric::make_sampled_set(space.ctx(), std::move(pts), "filter");
}

struct DiagnosticsReport {
  bool passed = false;
  std::string stage;
  std::string detail;
  std::vector<Point> witness_points;
  std::vector<double> witness_values;
  std::string horizon_note;
};

// A convergent pair-sequence with its designated limits; every term must
// satisfy x_k <= y_k.
struct PairSequence {
  std::vector<std::size_t> xs;
  std::vector<std::size_t> ys;
  std::size_t limit_x = 0;
  std::size_t limit_y = 0;
};

// Closedness of the order probed along supplied convergent pair-sequences:
// the designated limit pair must itself be ordered.
inline DiagnosticsReport order_closedness_probe(const SampledMetricPoset& space,
                                                const std::vector<PairSequence>& seqs) {
  DiagnosticsReport out;
  out.stage = "order-closedness";
  for (std::size_t s = 0; s < seqs.size(); ++s) {
    const auto& ps = seqs[s];
    if (ps.xs.size() != ps.ys.size() || ps.xs.empty())
      throw std::invalid_argument("order_closedness_probe: malformed pair sequence");
    for (std::size_t k = 0; k < ps.xs.size(); ++k)
      if (!space.leq(ps.xs[k], ps.ys[k]))
        throw std::invalid_argument("order_closedness_probe: term " + std::to_string(k + 1) +
                                    " of sequence " + std::to_string(s) + " is not ordered");
    if (!space.leq(ps.limit_x, ps.limit_y)) {
      out.passed = false;
      out.detail = "limit pair of sequence " + std::to_string(s) + " is not ordered";
      out.witness_points = {space.point(ps.limit_x), space.point(ps.limit_y)};
      out.witness_values = {static_cast<double>(s)};
      return out;
    }
  }
  out.passed = true;
  out.detail = "all designated limit pairs ordered";
  return out;
}

// Default probe battery: hit balls around every sampled point of x-down at
// each radius, plus one compact miss ball around every sampled point outside
// x-down (radius half its distance to the ideal, capped). Miss balls are
// only placed around points farther than `miss_floor` from the ideal:
// below the resolution at which the sequence has settled by the horizon,
// an eventually-avoided miss set can still look occupied, so callers pass
// roughly twice their finest convergence radius.
inline std::vector<FellNbhd> default_battery(const SampledMetricPoset& space, std::size_t x,
                                             const std::vector<double>& radii,
                                             double miss_floor = 0.0) {
  const SampledSet ideal = canonical_ideal(space, x);
  std::vector<FellNbhd> battery;
  for (const auto& p : ideal.points)
    for (double r : radii) battery.push_back({{Region::open_ball(p, r)}, std::nullopt});
  const double cap = radii.empty() ? 0.0 : radii.front();
  for (std::size_t z = 0; z < space.size(); ++z) {
    const Point& q = space.point(z);
    const double dq = metric::dist_point_set(space.ctx(), q, ideal);
    if (dq > std::max(2.0 * space.ctx().tol(), miss_floor))
      battery.push_back({{}, Region::closed_ball(q, std::min(dq / 2.0, cap))});
  }
  return battery;
}

namespace detail {

inline std::string describe(const FellNbhd& nbhd) {
  std::string s;
  for (const auto& h : nbhd.hits) {
    s += "hit ball(center=(";
    for (std::size_t k = 0; k < h.center.size(); ++k)
      s += (k ? "," : "") + std::to_string(h.center[k]);
    s += "), r=" + std::to_string(h.radius) + ") ";
  }
  if (nbhd.miss) {
    s += "miss ball(center=(";
    for (std::size_t k = 0; k < nbhd.miss->center.size(); ++k)
      s += (k ? "," : "") + std::to_string(nbhd.miss->center[k]);
    s += "), r=" + std::to_string(nbhd.miss->radius) + ")";
  }
  return s;
}

// Metric convergence at the horizon: for each radius the tail from some
// threshold onward stays inside it; as with every eventual statement the
// horizon reduces this to the final term.
inline bool metrically_converges(const MetricContext& ctx, const std::vector<Point>& xs,
                                 const Point& x, const std::vector<double>& radii) {
  if (xs.empty() || radii.empty()) return false;
  return ctx.dist(xs.back(), x) < radii.back();
}

}  // namespace detail

// Necessary-condition probe for continuity of x -> x-down into the Fell
// hyperspace: along the given convergent sequence, every battery
// neighborhood containing x-down must eventually contain x_n-down. The
// probe tests a finite battery, not full continuity; spaces flagged as
// Hausdorff metric semilattices must pass it on every tested sequence.
inline DiagnosticsReport forward_continuity_probe(const SampledMetricPoset& space,
                                                  const std::vector<std::size_t>& xs,
                                                  std::size_t x,
                                                  const std::vector<FellNbhd>& battery,
                                                  const std::vector<double>& conv_radii) {
  if (xs.empty()) throw std::invalid_argument("forward_continuity_probe: empty sequence");
  std::vector<Point> pts;
  for (std::size_t i : xs) pts.push_back(space.point(i));
  if (!detail::metrically_converges(space.ctx(), pts, space.point(x), conv_radii))
    throw std::invalid_argument(
        "forward_continuity_probe: sequence does not metrically converge to the limit "
        "within the finest radius by the horizon");

  const SampledSet limit_ideal = canonical_ideal(space, x);
  std::vector<SampledSet> ideals;
  for (std::size_t i : xs) ideals.push_back(canonical_ideal(space, i));
  const std::size_t N = xs.size();

  DiagnosticsReport out;
  out.stage = "forward-continuity";
  out.horizon_note = "membership verified up to horizon " + std::to_string(N);
  std::size_t checked = 0;
  for (const auto& nbhd : battery) {
    if (!fell::fell_membership(space.ctx(), limit_ideal, nbhd).member) continue;
    ++checked;
    std::vector<std::size_t> failing;
    for (std::size_t n = 1; n <= N; ++n)
      if (!fell::fell_membership(space.ctx(), ideals[n - 1], nbhd).member) failing.push_back(n);
    if (!failing.empty() && failing.back() == N) {
      out.passed = false;
      out.detail = "ideal sequence is not eventually in " + detail::describe(nbhd) +
                   "; missing at " + std::to_string(failing.size()) + " indices up to the horizon";
      if (!nbhd.hits.empty()) {
        out.witness_points = {nbhd.hits.front().center};
        out.witness_values = {nbhd.hits.front().radius};
      } else if (nbhd.miss) {
        out.witness_points = {nbhd.miss->center};
        out.witness_values = {nbhd.miss->radius};
      }
      return out;
    }
  }
  out.passed = true;
  out.detail = "eventual membership holds for all " + std::to_string(checked) +
               " applicable battery neighborhoods";
  return out;
}

struct InverseProbeOptions {
  KPParams kp;
  std::vector<double> conv_radii;
};

// Necessary-condition probe for continuity of the inverse x-down -> x: the
// ideal sequence must K-P converge to x-down (precondition), and then the
// points themselves must converge metrically. Spaces whose upper K-P flags
// are analytic sampling artifacts may declare a waiver (flags().kp_upper_waiver);
// the waiver is recorded in the report, never silently applied.
inline DiagnosticsReport inverse_continuity_probe(const SampledMetricPoset& space,
                                                  const std::vector<std::size_t>& xs,
                                                  std::size_t x, const InverseProbeOptions& opts) {
  if (xs.empty()) throw std::invalid_argument("inverse_continuity_probe: empty sequence");
  SetSequence seq;
  for (std::size_t i : xs) seq.terms.push_back(canonical_ideal(space, i));
  const SampledSet limit_ideal = canonical_ideal(space, x);
  const KPVerdict kp = fell::kp_check(space.ctx(), seq, limit_ideal, opts.kp);
  if (!kp.lower_ok)
    throw std::invalid_argument(
        "inverse_continuity_probe: ideal sequence fails the lower K-P clause against the "
        "candidate ideal");
  std::string waiver_note;
  if (!kp.upper_ok) {
    if (space.flags().kp_upper_waiver.empty())
      throw std::invalid_argument(
          "inverse_continuity_probe: ideal sequence has upper K-P escape flags and the space "
          "declares no analytic waiver");
    waiver_note = "; upper flags waived by declaration: " + space.flags().kp_upper_waiver;
  }

  DiagnosticsReport out;
  out.stage = "inverse-continuity";
  out.horizon_note = "K-P precondition consistent up to horizon " + std::to_string(xs.size()) +
                     waiver_note;
  std::vector<Point> pts;
  for (std::size_t i : xs) pts.push_back(space.point(i));
  double inf_dist = metric::kInf;
  for (const auto& p : pts) inf_dist = std::min(inf_dist, space.ctx().dist(p, space.point(x)));
  const double final_dist = space.ctx().dist(pts.back(), space.point(x));
  if (detail::metrically_converges(space.ctx(), pts, space.point(x), opts.conv_radii)) {
    out.passed = true;
    out.detail = "points converge metrically to the limit";
    out.witness_values = {final_dist};
  } else {
    out.passed = false;
    out.detail = "ideals converge but points do not; inf distance " + std::to_string(inf_dist);
    out.witness_points = {pts.back()};
    out.witness_values = {inf_dist, final_dist};
  }
  return out;
}

// Epsilon-neighborhood-graph connectivity of the sampled order interval
// [x, y]: a heuristic for topological connectedness, reported together with
// the epsilon used. Disconnected intervals return one representative per
// side of the split.
inline DiagnosticsReport order_connectedness_probe(const SampledMetricPoset& space, std::size_t x,
                                                   std::size_t y, double eps) {
  if (!space.leq(x, y))
    throw std::invalid_argument("order_connectedness_probe: endpoints are not ordered");
  std::vector<std::size_t> interval;
  for (std::size_t z = 0; z < space.size(); ++z)
    if (space.leq(x, z) && space.leq(z, y)) interval.push_back(z);

  std::vector<char> seen(interval.size(), 0);
  std::vector<std::size_t> stack = {0};
  seen[0] = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < interval.size(); ++j)
      if (!seen[j] &&
          space.ctx().dist(space.point(interval[i]), space.point(interval[j])) <= eps) {
        seen[j] = 1;
        stack.push_back(j);
      }
  }
  DiagnosticsReport out;
  out.stage = "order-connectedness";
  out.detail = "epsilon-graph on " + std::to_string(interval.size()) +
               " interval points, eps=" + std::to_string(eps);
  out.witness_values = {eps, static_cast<double>(interval.size())};
  for (std::size_t j = 0; j < interval.size(); ++j)
    if (!seen[j]) {
      out.passed = false;
      out.witness_points = {space.point(interval[0]), space.point(interval[j])};
      out.detail += "; disconnected, representatives from two components attached";
      return out;
    }
  out.passed = true;
  out.detail += "; connected";
  return out;
}

struct MetricTable {
  std::size_t n = 0;
  std::vector<double> d;

  double at(std::size_t i, std::size_t j) const { return d[i * n + j]; }
  double& at(std::size_t i, std::size_t j) { return d[i * n + j]; }
};

struct RadialCheck {
  bool pass = false;
  std::optional<std::array<std::size_t, 3>> witness;  // x <= y <= z with d(x,z) < max
};

// Scans every ordered triple x <= y <= z for d(x,z) >= max{d(x,y), d(y,z)}.
// `slack` absorbs float rounding only; the inequality is exact in real
// arithmetic for truncated Wijsman tables.
inline RadialCheck radial_convexity_check(const MetricTable& table,
                                          const std::function<bool(std::size_t, std::size_t)>& leq,
                                          double slack = 1e-12) {
  for (std::size_t y = 0; y < table.n; ++y) {
    std::vector<std::size_t> down, up;
    for (std::size_t z = 0; z < table.n; ++z) {
      if (leq(z, y)) down.push_back(z);
      if (leq(y, z)) up.push_back(z);
    }
    for (std::size_t x : down)
      for (std::size_t z : up) {
        const double lhs = table.at(x, z);
        if (lhs + slack < table.at(x, y) || lhs + slack < table.at(y, z))
          return {false, std::array<std::size_t, 3>{x, y, z}};
      }
  }
  return {true, std::nullopt};
}

struct RemetrizationCertificate {
  bool identity_ok = false;
  bool symmetry_ok = false;
  bool positivity_ok = false;
  bool triangle_ok = false;
  bool radially_convex = false;
  double truncation_bound = 0.0;
  double slack = 0.0;           // truncation_bound + float allowance
  double min_positive = 0.0;    // smallest D over distinct pairs
  std::optional<std::array<std::size_t, 3>> triangle_witness;
  std::optional<std::array<std::size_t, 3>> radial_witness;

  bool all_ok() const {
    return identity_ok && symmetry_ok && positivity_ok && triangle_ok && radially_convex;
  }
};

struct Remetrization {
  MetricTable table;
  RemetrizationCertificate cert;
};

// D(x,y) := rho_d(x-down, y-down) over all sampled pairs, with a certificate
// that D is a metric on the sample (up to the truncation bound) and radially
// convex with respect to the order.
inline Remetrization radially_convex_metric(const SampledMetricPoset& space, std::size_t horizon) {
  const std::size_t n = space.size();
  std::vector<SampledSet> ideals;
  ideals.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ideals.push_back(canonical_ideal(space, i));

  // dist[k][i] = d(dense_k, ideal_i); the Wijsman sums reduce to row scans.
  const auto dense = metric::dense_sequence(space.ctx(), horizon);
  std::vector<std::vector<double>> dist(dense.size(), std::vector<double>(n));
  for (std::size_t k = 0; k < dense.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      dist[k][i] = metric::dist_point_set(space.ctx(), dense[k], ideals[i]);

  Remetrization out;
  out.table.n = n;
  out.table.d.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double sum = 0.0, weight = 1.0;
      for (std::size_t k = 0; k < dense.size(); ++k) {
        weight *= 0.5;
        sum += weight * std::min(1.0, std::abs(dist[k][i] - dist[k][j]));
      }
      out.table.at(i, j) = sum;
      out.table.at(j, i) = sum;
    }

  auto& cert = out.cert;
  cert.truncation_bound = std::ldexp(1.0, -static_cast<int>(horizon));
  cert.slack = cert.truncation_bound + 1e-12;
  cert.identity_ok = true;
  for (std::size_t i = 0; i < n && cert.identity_ok; ++i)
    cert.identity_ok = out.table.at(i, i) == 0.0;
  cert.symmetry_ok = true;  // by construction
  cert.min_positive = metric::kInf;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      cert.min_positive = std::min(cert.min_positive, out.table.at(i, j));
  cert.positivity_ok = n < 2 || cert.min_positive > cert.slack;
  cert.triangle_ok = true;
  for (std::size_t i = 0; i < n && cert.triangle_ok; ++i)
    for (std::size_t j = 0; j < n && cert.triangle_ok; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (out.table.at(i, k) > out.table.at(i, j) + out.table.at(j, k) + cert.slack) {
          cert.triangle_ok = false;
          cert.triangle_witness = std::array<std::size_t, 3>{i, j, k};
          break;
        }
  const auto radial = radial_convexity_check(
      out.table, [&space](std::size_t a, std::size_t b) { return space.leq(a, b); });
  cert.radially_convex = radial.pass;
  cert.radial_witness = radial.witness;
  return out;
}

}  // namespace hyperlat::embedding

#endif  // HYPERLAT_EMBEDDING_HPP_
