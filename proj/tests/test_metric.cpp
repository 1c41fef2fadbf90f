#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "hyperlat/metric_sets.hpp"
#include "hyperlat/rng.hpp"
#include "oracles.hpp"

using namespace hyperlat;
using metric::MetricContext;
using metric::Point;
using metric::SampledSet;

namespace {

MetricContext plane(double half_width, double tol = 1e-9) {
  return MetricContext::euclidean({{-half_width, half_width}, {-half_width, half_width}}, tol);
}

// The L-shaped continuum ([-1,0]x{0}) u ({0}x[-1,0]), arms sampled at 1/16.
std::vector<Point> l_space_sample() {
  std::vector<Point> pts;
  for (int k = 0; k <= 16; ++k) pts.push_back({-1.0 + k / 16.0, 0.0});
  for (int k = 0; k <= 16; ++k) pts.push_back({0.0, -1.0 + k / 16.0});
  return pts;
}

}  // namespace

TEST_CASE("dist_point_set basics") {
  auto ctx = plane(5);
  auto s = metric::make_sampled_set(ctx, {{3, 4}});
  CHECK(metric::dist_point_set(ctx, {0, 0}, s) == doctest::Approx(5.0).epsilon(1e-12));
  SampledSet empty;
  CHECK(std::isinf(metric::dist_point_set(ctx, {0, 0}, empty)));
}

TEST_CASE("dist_point_set: L-space ideal distance hits sqrt(1 + 1/16)") {
  auto ctx = MetricContext::euclidean({{-1, 0}, {-1, 0}});
  // sampled ideal of (-1/4, 0) under the coordinatewise order: the short arm
  std::vector<Point> ideal;
  for (const auto& p : l_space_sample())
    if (p[0] <= -0.25 && p[1] <= 0.0) ideal.push_back(p);
  auto s = metric::make_sampled_set(ctx, ideal);
  const double expected = 1.0307764064044151;  // sqrt(17)/4
  CHECK(metric::dist_point_set(ctx, {0, -1}, s) == doctest::Approx(expected).epsilon(1e-9));
  // brute-force oracle over the same sample
  CHECK(oracles::dist_to_cloud({0, -1}, ideal) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("hausdorff basics and empty-set conventions") {
  auto ctx = plane(5);
  auto a = metric::make_sampled_set(ctx, {{0, 0}, {1, 1}});
  auto b = metric::make_sampled_set(ctx, {{3, 4}});
  CHECK(metric::hausdorff(ctx, a, a) == 0.0);
  auto origin = metric::make_sampled_set(ctx, {{0, 0}});
  CHECK(metric::hausdorff(ctx, origin, b) == doctest::Approx(5.0));
  SampledSet empty;
  CHECK(metric::hausdorff(ctx, empty, empty) == 0.0);
  CHECK(std::isinf(metric::hausdorff(ctx, empty, b)));
  CHECK(std::isinf(metric::hausdorff(ctx, b, empty)));
}

TEST_CASE("hausdorff: staircase carrier reproduces H = 1") {
  // carrier {(-1,-k)} u {(0,-k)} u {(-1/m,-k): k <= m}, k,m <= 20
  auto ctx = MetricContext::euclidean({{-1, 0}, {-20, -1}});
  std::vector<Point> carrier;
  for (int k = 1; k <= 20; ++k) carrier.push_back({-1.0, static_cast<double>(-k)});
  for (int k = 1; k <= 20; ++k) carrier.push_back({0.0, static_cast<double>(-k)});
  for (int m = 2; m <= 20; ++m)
    for (int k = 1; k <= m; ++k) carrier.push_back({-1.0 / m, static_cast<double>(-k)});

  auto ideal_of = [&](double x, double y) {
    std::vector<Point> pts;
    for (const auto& p : carrier)
      if (p[0] <= x && p[1] <= y) pts.push_back(p);
    return metric::make_sampled_set(ctx, pts);
  };

  const int n = 5;
  auto left = ideal_of(-1.0 / n, -1.0);
  auto right = ideal_of(0.0, -1.0);
  CHECK(metric::hausdorff(ctx, left, right) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("dense_sequence follows the dyadic enumeration") {
  SUBCASE("window [0,1], count 3") {
    auto ctx = MetricContext::euclidean({{0, 1}});
    auto pts = metric::dense_sequence(ctx, 3);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0][0] == 0.0);
    CHECK(pts[1][0] == 1.0);
    CHECK(pts[2][0] == 0.5);
  }
  SUBCASE("window [0,1]^2, count 4: level-0 corners in lexicographic order") {
    auto ctx = MetricContext::euclidean({{0, 1}, {0, 1}});
    auto pts = metric::dense_sequence(ctx, 4);
    REQUIRE(pts.size() == 4);
    CHECK(pts[0] == Point{0, 0});
    CHECK(pts[1] == Point{0, 1});
    CHECK(pts[2] == Point{1, 0});
    CHECK(pts[3] == Point{1, 1});
  }
  SUBCASE("points are pairwise distinct and the level gap halves") {
    auto ctx = MetricContext::euclidean({{0, 1}});
    // after completing level L the emitted set is the full 2^-L grid
    for (int L = 0; L <= 6; ++L) {
      const std::size_t count = (std::size_t{1} << L) + 1;
      auto pts = metric::dense_sequence(ctx, count);
      double min_gap = 1e9;
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
          min_gap = std::min(min_gap, std::abs(pts[i][0] - pts[j][0]));
      CHECK(min_gap == doctest::Approx(std::ldexp(1.0, -L)).epsilon(1e-12));
    }
    auto ctx2 = MetricContext::euclidean({{0, 1}, {0, 1}});
    auto pts = metric::dense_sequence(ctx2, 200);
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        CHECK(oracles::euclid(pts[i], pts[j]) > 0.0);
  }
  SUBCASE("degenerate window") {
    auto ctx = MetricContext::euclidean({{2, 2}});
    auto pts = metric::dense_sequence(ctx, 1);
    CHECK(pts[0][0] == 2.0);
    CHECK_THROWS_AS(metric::dense_sequence(ctx, 2), std::invalid_argument);
  }
}

TEST_CASE("wijsman_rho: identity, frozen value, and the summation oracle") {
  auto ctx = MetricContext::euclidean({{-2, 2}});
  auto a = metric::make_sampled_set(ctx, {{0.0}});
  auto b = metric::make_sampled_set(ctx, {{1.0}});
  CHECK(metric::wijsman_rho(ctx, a, a, 20).value == 0.0);

  auto v = metric::wijsman_rho(ctx, a, b, 20);
  // frozen: exact dyadic sum 1044431/1048576 for this window and horizon
  CHECK(v.value == doctest::Approx(0.9960470199584961).epsilon(1e-15));
  CHECK(v.truncation_bound == doctest::Approx(std::ldexp(1.0, -20)));

  auto dense = metric::dense_sequence(ctx, 20);
  std::vector<std::vector<double>> dense_vecs(dense.begin(), dense.end());
  CHECK(oracles::wijsman_sum(dense_vecs, {{0.0}}, {{1.0}}) ==
        doctest::Approx(v.value).epsilon(1e-14));

  SampledSet empty;
  CHECK_THROWS_AS(metric::wijsman_rho(ctx, empty, b, 20), std::domain_error);
  CHECK_THROWS_AS(metric::wijsman_rho(ctx, a, empty, 20), std::domain_error);
}

TEST_CASE("wijsman_rho: radial convexity along inclusion chains") {
  auto ctx = MetricContext::euclidean({{-2, 2}});
  Rng rng(101);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Point> pa, pb, pc;
    const int na = 1 + static_cast<int>(rng.uniform_int(0, 3));
    const int nb = na + static_cast<int>(rng.uniform_int(0, 3));
    const int nc = nb + static_cast<int>(rng.uniform_int(0, 3));
    for (int i = 0; i < nc; ++i) {
      Point p = {rng.uniform(-2, 2)};
      pc.push_back(p);
      if (i < nb) pb.push_back(p);
      if (i < na) pa.push_back(p);
    }
    auto A = metric::make_sampled_set(ctx, pa);
    auto B = metric::make_sampled_set(ctx, pb);
    auto C = metric::make_sampled_set(ctx, pc);
    REQUIRE(metric::subset_of(ctx, A, B));
    REQUIRE(metric::subset_of(ctx, B, C));

    const double ac = metric::wijsman_rho(ctx, A, C, 24).value;
    const double ab = metric::wijsman_rho(ctx, A, B, 24).value;
    const double bc = metric::wijsman_rho(ctx, B, C, 24).value;
    CHECK(ac >= ab - 1e-12);
    CHECK(ac >= bc - 1e-12);

    // per-term oracle: the gap for (A,C) dominates termwise
    auto dense = metric::dense_sequence(ctx, 24);
    for (const auto& x : dense) {
      const double da = metric::dist_point_set(ctx, x, A);
      const double db = metric::dist_point_set(ctx, x, B);
      const double dc = metric::dist_point_set(ctx, x, C);
      CHECK(da - dc >= db - dc - 1e-12);
      CHECK(da - dc >= da - db - 1e-12);
    }
  }
}

TEST_CASE("law: hausdorff symmetry and triangle inequality on random triples") {
  auto ctx = plane(4);
  Rng rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    auto rand_set = [&](int max_pts) {
      std::vector<Point> pts;
      const int n = 1 + static_cast<int>(rng.uniform_int(0, max_pts - 1));
      for (int i = 0; i < n; ++i) pts.push_back({rng.uniform(-4, 4), rng.uniform(-4, 4)});
      return metric::make_sampled_set(ctx, pts);
    };
    auto A = rand_set(6), B = rand_set(6), C = rand_set(6);
    const double ab = metric::hausdorff(ctx, A, B);
    CHECK(ab == metric::hausdorff(ctx, B, A));
    CHECK(ab <= metric::hausdorff(ctx, A, C) + metric::hausdorff(ctx, C, B) + 1e-9);
  }
}

TEST_CASE("law: monotonicity of the distance functional under inclusion") {
  auto ctx = plane(4);
  Rng rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Point> pa, pb;
    const int na = 1 + static_cast<int>(rng.uniform_int(0, 4));
    const int extra = static_cast<int>(rng.uniform_int(0, 4));
    for (int i = 0; i < na + extra; ++i) {
      Point p = {rng.uniform(-4, 4), rng.uniform(-4, 4)};
      pb.push_back(p);
      if (i < na) pa.push_back(p);
    }
    auto A = metric::make_sampled_set(ctx, pa);
    auto B = metric::make_sampled_set(ctx, pb);
    for (int k = 0; k < 10; ++k) {
      Point x = {rng.uniform(-4, 4), rng.uniform(-4, 4)};
      CHECK(metric::dist_point_set(ctx, x, B) <= metric::dist_point_set(ctx, x, A) + 1e-12);
    }
  }
}

TEST_CASE("make_sampled_set merges duplicates and validates the window") {
  auto ctx = plane(2, 1e-6);
  auto s = metric::make_sampled_set(ctx, {{1, 1}, {1.0 + 1e-8, 1.0}, {0, 0}});
  CHECK(s.size() == 2);
  CHECK_THROWS_AS(metric::make_sampled_set(ctx, {{5, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(metric::make_sampled_set(ctx, {{1, 1, 1}}), std::invalid_argument);
  CHECK(metric::hausdorff(ctx, s, s) == 0.0);
}

TEST_CASE("set algebra: subset, intersect, unite") {
  auto ctx = plane(3);
  auto a = metric::make_sampled_set(ctx, {{0, 0}, {1, 0}});
  auto b = metric::make_sampled_set(ctx, {{0, 0}, {1, 0}, {2, 0}});
  CHECK(metric::subset_of(ctx, a, b));
  CHECK(!metric::subset_of(ctx, b, a));
  auto i = metric::intersect(ctx, b, a);
  CHECK(i.size() == 2);
  auto u = metric::unite(ctx, a, b);
  CHECK(u.size() == 3);
}

TEST_CASE("table metric contexts validate the axioms on load") {
  CHECK_NOTHROW(MetricContext::from_table({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}));
  CHECK_THROWS_AS(MetricContext::from_table({{0, 5}, {5, 0.1}}), std::invalid_argument);
  CHECK_THROWS_AS(MetricContext::from_table({{0, 1}, {2, 0}}), std::invalid_argument);
  // triangle failure: d(0,2) = 10 > d(0,1) + d(1,2) = 2
  CHECK_THROWS_AS(MetricContext::from_table({{0, 1, 10}, {1, 0, 1}, {10, 1, 0}}),
                  std::invalid_argument);
  auto ctx = MetricContext::from_table({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  CHECK(ctx.dist({0.0}, {2.0}) == 2.0);
  CHECK_THROWS_AS(metric::dense_sequence(ctx, 3), std::domain_error);
}
