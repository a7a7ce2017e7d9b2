#include <doctest.h>

#include <random>

#include "fdepth/depth.hpp"
#include "fdepth/error.hpp"
#include "fdepth/homogeneity.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fdepth;

namespace {

// Depth of g among F plus g, by brute force.
double oracle_wrt(std::vector<std::vector<double>> F, const std::vector<double>& g, int J = 2, bool relax = false) {
  F.push_back(g);
  return oracle::band_depth(F, J, relax).back();
}

std::vector<std::vector<double>> shifted(std::vector<std::vector<double>> v, double by) {
  for (auto& c : v)
    for (auto& x : c) x += by;
  return v;
}

// Noisy copies of one smooth shape.
std::vector<std::vector<double>> family(std::mt19937_64& rng, int n, int T, double offset = 0.0) {
  // curves differ mostly by level, so bands nest and strict depth is informative
  std::normal_distribution<double> level(0.0, 1.0), g(0.0, 0.05);
  std::vector<std::vector<double>> v(n, std::vector<double>(T));
  for (auto& c : v) {
    const double a = level(rng);
    for (int t = 0; t < T; ++t) c[t] = std::sin(0.5 * t) + offset + a + g(rng);
  }
  return v;
}

}  // namespace

TEST_CASE("depth with respect to another sample") {
  const auto F = fixtures::six_curves_values();
  const auto Fs = fixtures::six_curves();
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const auto G = fixtures::random_integer_curves(rng, 3, 5, 12);
    const auto Gs = fixtures::univariate(G, "g_");
    for (std::size_t g = 0; g < G.size(); ++g) {
      for (bool relax : {false, true}) {
        DepthParams p;
        p.relax = relax;
        CHECK(depth_wrt(Gs, g, Fs, p) == doctest::Approx(oracle_wrt(F, G[g], 2, relax)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("F's deepest curve measured against the rest of F") {
  // d_{F minus g}(g) has denominator C(|F|, j), the same as g's own depth
  const auto all = fixtures::six_curves_values();
  std::vector<std::vector<double>> rest;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (i != 3) rest.push_back(all[i]);
  const auto G = fixtures::univariate({all[3]}, "g_");
  CHECK(depth_wrt(G, 0, fixtures::univariate(rest), DepthParams{}) == 6.0 / 15.0);
}

TEST_CASE("a copy of a member keeps the duplicate") {
  const auto F = fixtures::six_curves();
  const auto G = fixtures::univariate({fixtures::six_curves_values()[2]}, "g_");
  const double d = depth_wrt(G, 0, F, DepthParams{});
  // 3 bands of the other curves contain f_2, and all 5 bands built with f_2 do
  CHECK(d == doctest::Approx(8.0 / 21.0));
  CHECK(d * 21 >= 3);
}

TEST_CASE("P1 and P2 on the worked example") {
  const auto F = fixtures::six_curves();
  const auto r = p1(F, F, DepthParams{});
  CHECK(r.deepest_of_G_id == "f_3");
  CHECK_FALSE(r.deepest_of_F_id.has_value());
  // f_3 is inside its 5 own-copy bands plus 6 others, out of C(7, 2)
  CHECK(r.value == doctest::Approx(11.0 / 21.0));
  CHECK(r.value == oracle_wrt(fixtures::six_curves_values(), fixtures::six_curves_values()[3]));

  const auto q = p2(F, F, DepthParams{});
  CHECK(q.value == 0.0);
  CHECK(q.deepest_of_F_id == std::optional<std::string>("f_3"));

  const auto deepest = deepest_in(F, F, DepthParams{});
  CHECK(deepest.first == "f_3");
}

TEST_CASE("far away samples") {
  const auto F = fixtures::six_curves();
  const auto G = fixtures::univariate(shifted(fixtures::six_curves_values(), 1000), "g_");
  CHECK(p1(F, G, DepthParams{}).value == 0.0);
  CHECK(p2(F, G, DepthParams{}).value == p1(F, F, DepthParams{}).value);
  const auto fg = p1(F, G, DepthParams{});
  const auto ff = p1(F, F, DepthParams{});
  CHECK(p2(F, G, DepthParams{}).value == std::abs(fg.value - ff.value));
}

TEST_CASE("two halves of one family") {
  std::mt19937_64 rng(42);
  const auto v = family(rng, 12, 8);
  const std::vector<std::vector<double>> a(v.begin(), v.begin() + 6), b(v.begin() + 6, v.end());
  const auto r = p1(fixtures::univariate(a), fixtures::univariate(b, "g_"), DepthParams{});
  CHECK(r.value > 0.0);
}

TEST_CASE("deepest_in ties and singletons") {
  const auto F = fixtures::univariate({{0, 0}, {2, 2}, {4, 4}});
  // both members of G are equally deep
  const auto G = fixtures::univariate({{1, 1}, {3, 3}}, "g_");
  CHECK(deepest_in(G, F, DepthParams{}).first == "g_0");
  const auto single = fixtures::univariate({{100, 100}}, "z");
  CHECK(deepest_in(single, F, DepthParams{}).first == "z0");
}

TEST_CASE("method names") {
  CHECK(parse_homogeneity_method("p1") == HomogeneityMethod::p1);
  CHECK(parse_homogeneity_method("p2") == HomogeneityMethod::p2);
  CHECK_THROWS_WITH(parse_homogeneity_method("p3"), doctest::Contains("Flores"));
  CHECK_THROWS_AS(parse_homogeneity_method("p4"), Error);
  CHECK_THROWS_AS(parse_homogeneity_method("x"), Error);
}

TEST_CASE("incompatible samples") {
  const auto F = fixtures::six_curves();
  const auto G = fixtures::univariate({{1, 2}, {3, 4}, {5, 6}});
  CHECK_THROWS_AS(p1(F, G, DepthParams{}), Error);
  const auto M = fixtures::multivariate({{{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}}});
  CHECK_THROWS_AS(p1(F, M, DepthParams{}), Error);
}

TEST_CASE("matrix") {
  std::mt19937_64 rng(43);
  std::vector<FunctionalSample> groups;
  groups.push_back(fixtures::univariate(family(rng, 8, 10), "a"));
  groups.push_back(fixtures::univariate(family(rng, 8, 10), "b"));
  groups.push_back(fixtures::univariate(family(rng, 8, 10, 6.0), "c"));
  const auto m = homogeneity_matrix(groups, HomogeneityMethod::p2, DepthParams{});
  REQUIRE(m.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(m[i][i] == 0.0);
  CHECK(m[0][2] > m[0][1]);
  CHECK(m[0][2] > m[1][0]);
  CHECK(m[1][2] > m[0][1]);
  CHECK(m[2][0] > m[1][0]);
  CHECK(m[2][1] > m[0][1]);
  CHECK(m[0][1] == p2(groups[0], groups[1], DepthParams{}).value);

  const std::vector<FunctionalSample> same{groups[0], groups[0]};
  for (const auto& row : homogeneity_matrix(same, HomogeneityMethod::p2, DepthParams{}))
    for (double x : row) CHECK(x == 0.0);
  CHECK_THROWS_AS(homogeneity_matrix(std::vector<FunctionalSample>{groups[0]}, HomogeneityMethod::p2, {}), Error);
}

TEST_CASE("point clouds and resampling") {
  std::mt19937_64 rng(44);
  DepthParams p;
  p.containment = Containment::simplex;
  const PointCloud F(fixtures::random_points(rng, 8, 2));
  CHECK(p2(F, F, p).value == 0.0);
  p.containment = Containment::mahalanobis;
  CHECK(p2(F, F, p).value == 0.0);

  DepthParams k;
  k.K = 2;
  k.seed = 3;
  const auto S = fixtures::univariate(family(rng, 12, 6));
  const auto r = p2(S, S, k);
  CHECK(r.value == 0.0);
  CHECK(r.params.seed == 3);
  CHECK(p1(S, S, k).value == p1(S, S, k).value);
}
