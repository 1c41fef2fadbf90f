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

#ifndef HYPERLAT_ORDER_CORE_HPP_
#define HYPERLAT_ORDER_CORE_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

// Finite partial orders with explicit relations. Everything here is brute
// force on purpose: relations are stored as dense boolean matrices so axiom
// checks are exhaustive and every verdict carries an exact witness. These
// routines double as the oracles for the closed-form orders used elsewhere.
namespace hyperlat::order {

using ElemId = std::string;

struct AxiomViolation {
  std::string axiom;  // "reflexivity" | "antisymmetry" | "transitivity" | "unknown-element"
  std::vector<ElemId> witness;
};

struct OrderValidationReport {
  bool is_valid = false;
  std::vector<AxiomViolation> violations;
};

class FinitePoset {
 public:
  FinitePoset(std::vector<ElemId> elements, std::vector<char> leq_matrix)
      : elements_(std::move(elements)), leq_(std::move(leq_matrix)) {
    for (std::size_t i = 0; i < elements_.size(); ++i) index_[elements_[i]] = i;
  }

  std::size_t size() const { return elements_.size(); }
  const ElemId& id(std::size_t i) const { return elements_[i]; }
  const std::vector<ElemId>& elements() const { return elements_; }

  std::size_t index_of(const ElemId& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) throw std::invalid_argument("unknown element: " + e);
    return it->second;
  }

  bool leq(std::size_t a, std::size_t b) const { return leq_[a * size() + b] != 0; }
  bool leq(const ElemId& a, const ElemId& b) const { return leq(index_of(a), index_of(b)); }

 private:
  std::vector<ElemId> elements_;
  std::unordered_map<ElemId, std::size_t> index_;
  std::vector<char> leq_;
};

namespace detail {

// Builds the dense relation matrix, reporting identifiers outside `elements`.
inline std::optional<std::vector<char>> relation_matrix(
    const std::vector<ElemId>& elements,
    const std::vector<std::pair<ElemId, ElemId>>& pairs,
    std::vector<AxiomViolation>* unknown) {
  std::unordered_map<ElemId, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = i;
  std::vector<char> m(elements.size() * elements.size(), 0);
  bool ok = true;
  for (const auto& [a, b] : pairs) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      ok = false;
      if (unknown) unknown->push_back({"unknown-element", {a, b}});
      continue;
    }
    m[ia->second * elements.size() + ib->second] = 1;
  }
  if (!ok) return std::nullopt;
  return m;
}

}  // namespace detail

// Checks the three partial order axioms exhaustively and lists every
// violation with a witness. Unknown identifiers in `pairs` are an input
// error and reported as such.
inline OrderValidationReport validate_partial_order(
    const std::vector<ElemId>& elements,
    const std::vector<std::pair<ElemId, ElemId>>& pairs) {
  OrderValidationReport report;
  if (elements.empty()) {
    report.violations.push_back({"empty-carrier", {}});
    return report;
  }
  auto matrix = detail::relation_matrix(elements, pairs, &report.violations);
  if (!matrix) return report;
  const std::size_t n = elements.size();
  auto leq = [&](std::size_t a, std::size_t b) { return (*matrix)[a * n + b] != 0; };
  for (std::size_t a = 0; a < n; ++a)
    if (!leq(a, a)) report.violations.push_back({"reflexivity", {elements[a]}});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (leq(a, b) && leq(b, a))
        report.violations.push_back({"antisymmetry", {elements[a], elements[b]}});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!leq(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (leq(b, c) && !leq(a, c))
          report.violations.push_back(
              {"transitivity", {elements[a], elements[b], elements[c]}});
    }
  report.is_valid = report.violations.empty();
  return report;
}

// Validating constructor; throws if the axioms fail.
inline FinitePoset make_poset(const std::vector<ElemId>& elements,
                              const std::vector<std::pair<ElemId, ElemId>>& pairs) {
  auto report = validate_partial_order(elements, pairs);
  if (!report.is_valid) {
    std::string msg = "not a partial order:";
    for (const auto& v : report.violations) {
      msg += " " + v.axiom + "(";
      for (std::size_t i = 0; i < v.witness.size(); ++i)
        msg += (i ? "," : "") + v.witness[i];
      msg += ")";
    }
    throw std::invalid_argument(msg);
  }
  auto matrix = detail::relation_matrix(elements, pairs, nullptr);
  return FinitePoset(elements, std::move(*matrix));
}

// Greatest lower bound by exhaustive search: collect the common lower
// bounds, then look for one that dominates all of them. Absent when the
// lower set has no greatest element.
inline std::optional<std::size_t> big_meet(const FinitePoset& p,
                                           const std::vector<std::size_t>& subset) {
  if (subset.empty()) throw std::invalid_argument("big_meet of empty subset");
  std::vector<std::size_t> lower;
  for (std::size_t z = 0; z < p.size(); ++z) {
    bool below_all = true;
    for (std::size_t s : subset)
      if (!p.leq(z, s)) { below_all = false; break; }
    if (below_all) lower.push_back(z);
  }
  for (std::size_t g : lower) {
    bool greatest = true;
    for (std::size_t z : lower)
      if (!p.leq(z, g)) { greatest = false; break; }
    if (greatest) return g;
  }
  return std::nullopt;
}

inline std::optional<std::size_t> big_join(const FinitePoset& p,
                                           const std::vector<std::size_t>& subset) {
  if (subset.empty()) throw std::invalid_argument("big_join of empty subset");
  std::vector<std::size_t> upper;
  for (std::size_t z = 0; z < p.size(); ++z) {
    bool above_all = true;
    for (std::size_t s : subset)
      if (!p.leq(s, z)) { above_all = false; break; }
    if (above_all) upper.push_back(z);
  }
  for (std::size_t g : upper) {
    bool least = true;
    for (std::size_t z : upper)
      if (!p.leq(g, z)) { least = false; break; }
    if (least) return g;
  }
  return std::nullopt;
}

inline std::optional<std::size_t> meet(const FinitePoset& p, std::size_t a, std::size_t b) {
  return big_meet(p, {a, b});
}

inline std::optional<std::size_t> join(const FinitePoset& p, std::size_t a, std::size_t b) {
  return big_join(p, {a, b});
}

inline std::vector<std::size_t> down_set(const FinitePoset& p, std::size_t x) {
  std::vector<std::size_t> out;
  for (std::size_t z = 0; z < p.size(); ++z)
    if (p.leq(z, x)) out.push_back(z);
  return out;
}

inline std::vector<std::size_t> up_set(const FinitePoset& p, std::size_t x) {
  std::vector<std::size_t> out;
  for (std::size_t z = 0; z < p.size(); ++z)
    if (p.leq(x, z)) out.push_back(z);
  return out;
}

inline std::vector<std::size_t> interval(const FinitePoset& p, std::size_t x, std::size_t y) {
  if (!p.leq(x, y))
    throw std::invalid_argument("interval endpoints not ordered: " + p.id(x) +
                                " is not below " + p.id(y));
  std::vector<std::size_t> out;
  for (std::size_t z = 0; z < p.size(); ++z)
    if (p.leq(x, z) && p.leq(z, y)) out.push_back(z);
  return out;
}

struct FilteredResult {
  bool filtered = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // pair with no lower bound in S
};

// Pairwise lower bounds inside S suffice on a finite poset: a lower bound
// for any finite subset is obtained by folding the pairwise bounds, so the
// pair check is equivalent to the finite-subset definition.
inline FilteredResult is_filtered(const FinitePoset& p, const std::vector<std::size_t>& subset) {
  if (subset.empty()) throw std::invalid_argument("is_filtered of empty subset");
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = i; j < subset.size(); ++j) {
      bool has_bound = false;
      for (std::size_t z : subset)
        if (p.leq(z, subset[i]) && p.leq(z, subset[j])) { has_bound = true; break; }
      if (!has_bound) return {false, std::make_pair(subset[i], subset[j])};
    }
  return {true, std::nullopt};
}

struct EmbeddingCheck {
  bool ok = false;
  // On failure: the offending pair plus which direction of the biconditional broke.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::string direction;  // "order-not-preserved" | "order-not-reflected"
};

// x ≼₁ y iff φ(x) ≼₂ φ(y), checked over every pair. `map` sends indices of
// `a` to indices of `b` and must be total.
inline EmbeddingCheck is_order_embedding(const FinitePoset& a, const FinitePoset& b,
                                         const std::vector<std::size_t>& map) {
  if (map.size() != a.size()) throw std::invalid_argument("map not total on domain");
  for (std::size_t img : map)
    if (img >= b.size()) throw std::invalid_argument("map image outside codomain");
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y) {
      const bool dom = a.leq(x, y);
      const bool img = b.leq(map[x], map[y]);
      if (dom && !img) return {false, std::make_pair(x, y), "order-not-preserved"};
      if (!dom && img) return {false, std::make_pair(x, y), "order-not-reflected"};
    }
  return {true, std::nullopt, ""};
}

}  // namespace hyperlat::order

#endif  // HYPERLAT_ORDER_CORE_HPP_
