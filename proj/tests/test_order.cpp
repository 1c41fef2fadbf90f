#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "hyperlat/order_core.hpp"
#include "hyperlat/rng.hpp"
#include "oracles.hpp"

using namespace hyperlat;
using order::ElemId;

namespace {

std::vector<ElemId> range_ids(int lo, int hi) {
  std::vector<ElemId> out;
  for (int i = lo; i <= hi; ++i) out.push_back(std::to_string(i));
  return out;
}

std::vector<std::pair<ElemId, ElemId>> divisibility_pairs(int lo, int hi) {
  std::vector<std::pair<ElemId, ElemId>> pairs;
  for (int a = lo; a <= hi; ++a)
    for (int b = lo; b <= hi; ++b)
      if (b % a == 0) pairs.emplace_back(std::to_string(a), std::to_string(b));
  return pairs;
}

}  // namespace

TEST_CASE("validate: singleton reflexive is valid") {
  auto r = order::validate_partial_order({"a"}, {{"a", "a"}});
  CHECK(r.is_valid);
  CHECK(r.violations.empty());
}

TEST_CASE("validate: two-cycle yields an antisymmetry witness") {
  auto r = order::validate_partial_order({"a", "b"},
                                         {{"a", "a"}, {"b", "b"}, {"a", "b"}, {"b", "a"}});
  CHECK(!r.is_valid);
  bool found = false;
  for (const auto& v : r.violations)
    if (v.axiom == "antisymmetry" && v.witness == std::vector<ElemId>{"a", "b"}) found = true;
  CHECK(found);
}

TEST_CASE("validate: divisibility on 1..6 agrees with the triple-loop oracle") {
  auto elements = range_ids(1, 6);
  auto pairs = divisibility_pairs(1, 6);
  std::set<std::pair<std::string, std::string>> rel(pairs.begin(), pairs.end());
  auto oracle = oracles::check_order_axioms(elements, rel);
  CHECK(oracle.valid());
  auto r = order::validate_partial_order(elements, pairs);
  CHECK(r.is_valid == oracle.valid());
  CHECK(r.is_valid);
}

TEST_CASE("validate: unknown identifier is an input error") {
  auto r = order::validate_partial_order({"a"}, {{"a", "a"}, {"a", "z"}});
  CHECK(!r.is_valid);
  REQUIRE(!r.violations.empty());
  CHECK(r.violations.front().axiom == "unknown-element");
  CHECK_THROWS_AS(order::make_poset({"a"}, {{"a", "z"}}), std::invalid_argument);
}

TEST_CASE("validate agrees with the oracle on every relation over 3 elements and random ones over 6") {
  // exhaustive over all off-diagonal subsets with reflexive pairs fixed
  const std::vector<ElemId> elems = {"a", "b", "c"};
  std::vector<std::pair<ElemId, ElemId>> off;
  for (const auto& x : elems)
    for (const auto& y : elems)
      if (x != y) off.emplace_back(x, y);
  for (unsigned mask = 0; mask < (1u << off.size()); ++mask) {
    std::vector<std::pair<ElemId, ElemId>> pairs;
    for (const auto& x : elems) pairs.emplace_back(x, x);
    for (std::size_t k = 0; k < off.size(); ++k)
      if (mask & (1u << k)) pairs.push_back(off[k]);
    std::set<std::pair<std::string, std::string>> rel(pairs.begin(), pairs.end());
    const bool oracle_valid = oracles::check_order_axioms(elems, rel).valid();
    const bool lib_valid = order::validate_partial_order(elems, pairs).is_valid;
    REQUIRE(oracle_valid == lib_valid);
  }

  Rng rng(2026);
  const auto elems6 = range_ids(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::pair<ElemId, ElemId>> pairs;
    for (const auto& x : elems6)
      for (const auto& y : elems6)
        if (x == y || rng.coin(0.25)) pairs.emplace_back(x, y);
    std::set<std::pair<std::string, std::string>> rel(pairs.begin(), pairs.end());
    const bool oracle_valid = oracles::check_order_axioms(elems6, rel).valid();
    const bool lib_valid = order::validate_partial_order(elems6, pairs).is_valid;
    REQUIRE(oracle_valid == lib_valid);
  }
}

TEST_CASE("meet: divisibility glb is the gcd") {
  auto p = order::make_poset(range_ids(1, 12), divisibility_pairs(1, 12));
  auto m = order::meet(p, p.index_of("4"), p.index_of("6"));
  REQUIRE(m.has_value());
  CHECK(p.id(*m) == "2");
}

TEST_CASE("meet: coordinatewise on {0,1}^2 is the componentwise min") {
  std::vector<ElemId> elems = {"00", "01", "10", "11"};
  std::vector<std::pair<ElemId, ElemId>> pairs;
  auto bit = [](const ElemId& e, int k) { return e[k] - '0'; };
  for (const auto& a : elems)
    for (const auto& b : elems)
      if (bit(a, 0) <= bit(b, 0) && bit(a, 1) <= bit(b, 1)) pairs.emplace_back(a, b);
  auto p = order::make_poset(elems, pairs);
  auto m = order::meet(p, p.index_of("01"), p.index_of("10"));
  REQUIRE(m.has_value());
  CHECK(p.id(*m) == "00");
}

TEST_CASE("meet: antichain has no meet") {
  auto p = order::make_poset({"a", "b"}, {{"a", "a"}, {"b", "b"}});
  CHECK(!order::meet(p, 0, 1).has_value());
}

TEST_CASE("down_set, up_set, interval") {
  auto chain = order::make_poset({"1", "2", "3"},
                                 {{"1", "1"}, {"2", "2"}, {"3", "3"},
                                  {"1", "2"}, {"2", "3"}, {"1", "3"}});
  auto ds = order::down_set(chain, chain.index_of("2"));
  std::set<ElemId> got;
  for (auto i : ds) got.insert(chain.id(i));
  CHECK(got == std::set<ElemId>{"1", "2"});

  auto iv = order::interval(chain, chain.index_of("2"), chain.index_of("2"));
  REQUIRE(iv.size() == 1);
  CHECK(chain.id(iv[0]) == "2");

  CHECK_THROWS_WITH_AS(order::interval(chain, chain.index_of("3"), chain.index_of("1")),
                       doctest::Contains("3"), std::invalid_argument);

  // divisibility down-set of 12, expected values from the divisibility oracle
  auto p = order::make_poset(range_ids(1, 12), divisibility_pairs(1, 12));
  std::set<ElemId> expected;
  for (int d = 1; d <= 12; ++d)
    if (12 % d == 0) expected.insert(std::to_string(d));
  CHECK(expected == std::set<ElemId>{"1", "2", "3", "4", "6", "12"});
  std::set<ElemId> lib;
  for (auto i : order::down_set(p, p.index_of("12"))) lib.insert(p.id(i));
  CHECK(lib == expected);
}

TEST_CASE("is_filtered") {
  auto p = order::make_poset(range_ids(1, 12), divisibility_pairs(1, 12));
  SUBCASE("chains are filtered") {
    std::vector<std::size_t> chain = {p.index_of("1"), p.index_of("2"), p.index_of("4")};
    CHECK(order::is_filtered(p, chain).filtered);
  }
  SUBCASE("down-sets are filtered (meets exist below the top)") {
    auto s = order::down_set(p, p.index_of("12"));
    CHECK(order::is_filtered(p, s).filtered);
  }
  SUBCASE("the incomparable pair of {0,1}^2 with no bottom is not filtered") {
    auto q = order::make_poset({"01", "10"}, {{"01", "01"}, {"10", "10"}});
    auto r = order::is_filtered(q, {0, 1});
    CHECK(!r.filtered);
    REQUIRE(r.witness.has_value());
  }
  SUBCASE("empty subset is a precondition error") {
    CHECK_THROWS_AS(order::is_filtered(p, {}), std::invalid_argument);
  }
}

TEST_CASE("is_order_embedding") {
  auto p = order::make_poset(range_ids(1, 12), divisibility_pairs(1, 12));

  SUBCASE("identity embeds") {
    std::vector<std::size_t> ident(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) ident[i] = i;
    CHECK(order::is_order_embedding(p, p, ident).ok);
  }

  SUBCASE("x -> down_set(x) into the inclusion order") {
    // Build the inclusion order on the twelve down-sets by enumeration.
    std::vector<std::set<std::size_t>> downs;
    for (std::size_t i = 0; i < p.size(); ++i) {
      auto d = order::down_set(p, i);
      downs.emplace_back(d.begin(), d.end());
    }
    std::vector<ElemId> set_ids;
    for (std::size_t i = 0; i < downs.size(); ++i) set_ids.push_back("D" + std::to_string(i));
    std::vector<std::pair<ElemId, ElemId>> incl;
    for (std::size_t i = 0; i < downs.size(); ++i)
      for (std::size_t j = 0; j < downs.size(); ++j)
        if (std::includes(downs[j].begin(), downs[j].end(), downs[i].begin(), downs[i].end()))
          incl.emplace_back(set_ids[i], set_ids[j]);
    auto q = order::make_poset(set_ids, incl);
    std::vector<std::size_t> phi(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) phi[i] = i;
    CHECK(order::is_order_embedding(p, q, phi).ok);
  }

  SUBCASE("constant map on a 2-chain fails with the comparable pair") {
    auto chain = order::make_poset({"a", "b"}, {{"a", "a"}, {"b", "b"}, {"a", "b"}});
    auto r = order::is_order_embedding(chain, chain, {0, 0});
    CHECK(!r.ok);
    REQUIRE(r.witness.has_value());
    CHECK(r.direction == "order-not-reflected");
  }

  SUBCASE("image outside codomain is an input error") {
    auto tiny = order::make_poset({"a"}, {{"a", "a"}});
    CHECK_THROWS_AS(order::is_order_embedding(p, tiny, std::vector<std::size_t>(p.size(), 5)),
                    std::invalid_argument);
  }
}

TEST_CASE("law: meet is the greatest lower bound on random posets") {
  Rng rng(7);
  auto elems = range_ids(0, 7);
  for (int trial = 0; trial < 60; ++trial) {
    auto pairs = oracles::random_order_pairs(rng, elems, 0.35);
    auto p = order::make_poset(elems, pairs);
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b) {
        auto m = order::meet(p, a, b);
        if (!m) continue;
        CHECK(p.leq(*m, a));
        CHECK(p.leq(*m, b));
        for (std::size_t z = 0; z < p.size(); ++z)
          if (p.leq(z, a) && p.leq(z, b)) CHECK(p.leq(z, *m));
      }
  }
}

TEST_CASE("law: down_set(meet) is the intersection of down_sets") {
  Rng rng(11);
  auto elems = range_ids(0, 7);
  for (int trial = 0; trial < 60; ++trial) {
    auto p = order::make_poset(elems, oracles::random_order_pairs(rng, elems, 0.3));
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b) {
        auto m = order::meet(p, a, b);
        if (!m) continue;
        auto dm = order::down_set(p, *m);
        std::set<std::size_t> want;
        auto da = order::down_set(p, a);
        auto db = order::down_set(p, b);
        std::set<std::size_t> sa(da.begin(), da.end());
        for (auto z : db)
          if (sa.count(z)) want.insert(z);
        CHECK(std::set<std::size_t>(dm.begin(), dm.end()) == want);
      }
  }
}

TEST_CASE("law: the canonical embedding is an order-embedding on every random poset") {
  Rng rng(13);
  auto elems = range_ids(0, 6);
  for (int trial = 0; trial < 60; ++trial) {
    auto p = order::make_poset(elems, oracles::random_order_pairs(rng, elems, 0.4));
    std::vector<std::set<std::size_t>> downs;
    for (std::size_t i = 0; i < p.size(); ++i) {
      auto d = order::down_set(p, i);
      downs.emplace_back(d.begin(), d.end());
    }
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = 0; y < p.size(); ++y) {
        const bool sub = std::includes(downs[y].begin(), downs[y].end(),
                                       downs[x].begin(), downs[x].end());
        REQUIRE(p.leq(x, y) == sub);
      }
  }
}

TEST_CASE("big_meet and big_join on the divisibility lattice") {
  auto p = order::make_poset(range_ids(1, 12), divisibility_pairs(1, 12));
  auto m = order::big_meet(p, {p.index_of("4"), p.index_of("6"), p.index_of("10")});
  REQUIRE(m.has_value());
  CHECK(p.id(*m) == "2");
  auto j = order::big_join(p, {p.index_of("2"), p.index_of("3")});
  REQUIRE(j.has_value());
  CHECK(p.id(*j) == "6");
  CHECK(!order::big_join(p, {p.index_of("5"), p.index_of("7")}).has_value());
}
