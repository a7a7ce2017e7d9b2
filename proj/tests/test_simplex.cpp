#include <doctest.h>

#include <random>

#include "fdepth/error.hpp"
#include "fdepth/simplex.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fdepth;

TEST_CASE("point in triangle") {
  const Simplex tri{{{0, 0}, {4, 0}, {0, 4}}};
  CHECK(point_in_simplex(std::vector<double>{1, 1}, tri));
  CHECK(point_in_simplex(std::vector<double>{4.0 / 3, 4.0 / 3}, tri));
  CHECK(point_in_simplex(std::vector<double>{0, 0}, tri));
  CHECK(point_in_simplex(std::vector<double>{2, 2}, tri));  // on an edge
  CHECK_FALSE(point_in_simplex(std::vector<double>{5, 5}, tri));
  CHECK_FALSE(point_in_simplex(std::vector<double>{-0.1, 1}, tri));
  CHECK_THROWS_AS(point_in_simplex(std::vector<double>{1, 1, 1}, tri), Error);
  CHECK_THROWS_AS(point_in_simplex(std::vector<double>{1, 1}, Simplex{{{0, 0}, {1, 0}}}), Error);
}

TEST_CASE("centroids and vertices of random simplices") {
  std::mt19937_64 rng(1);
  for (int d = 1; d <= 4; ++d) {
    for (int trial = 0; trial < 20; ++trial) {
      Simplex s{fixtures::random_points(rng, d + 1, d)};
      std::vector<double> c(d, 0.0);
      for (const auto& v : s.vertices)
        for (int k = 0; k < d; ++k) c[k] += v[k] / (d + 1);
      CHECK(point_in_simplex(c, s));
      for (const auto& v : s.vertices) CHECK(point_in_simplex(v, s));
      const auto w = barycentric_coordinates(c, s);
      REQUIRE(w.has_value());
      double sum = 0;
      for (double x : *w) {
        CHECK(x == doctest::Approx(1.0 / (d + 1)).epsilon(1e-9));
        sum += x;
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("degenerate simplices contain only their vertices") {
  const Simplex line{{{0, 0}, {1, 1}, {2, 2}}};
  CHECK_FALSE(barycentric_coordinates(std::vector<double>{1, 1}, line).has_value());
  CHECK(point_in_simplex(std::vector<double>{1, 1}, line));
  CHECK_FALSE(point_in_simplex(std::vector<double>{0.5, 0.5}, line));
  CHECK_FALSE(point_in_simplex(std::vector<double>{3, 0}, line));
  SimplexSolver solver(2);
  solver.set_vertex(0, std::vector<double>{0, 0});
  solver.set_vertex(1, std::vector<double>{1, 1});
  solver.set_vertex(2, std::vector<double>{2, 2});
  solver.factor();
  CHECK(solver.degenerate());
}

TEST_CASE("volume") {
  CHECK(simplex_volume(Simplex{{{0, 0}, {1, 0}, {0, 1}}}) == doctest::Approx(0.5));
  CHECK(simplex_volume(Simplex{{{0, 0}, {4, 0}, {0, 4}}}) == doctest::Approx(8.0));
  CHECK(simplex_volume(Simplex{{{0, 0}, {1, 1}, {3, 3}}}) == doctest::Approx(0.0));
  CHECK(simplex_volume(Simplex{{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}) == doctest::Approx(1.0 / 6.0));

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    Simplex s{fixtures::random_points(rng, 4, 3)};
    Simplex moved = s;
    for (auto& v : moved.vertices)
      for (auto& x : v) x += 3.5;
    CHECK(simplex_volume(moved) == doctest::Approx(simplex_volume(s)).epsilon(1e-9));
    Simplex scaled = s;
    for (auto& v : scaled.vertices) {
      v[0] *= 2;
      v[1] *= 3;
    }
    CHECK(simplex_volume(scaled) == doctest::Approx(6 * simplex_volume(s)).epsilon(1e-9));
  }
}

TEST_CASE("determinant") {
  std::vector<double> a{2, 0, 0, 0, 3, 0, 0, 0, 4};
  CHECK(determinant_in_place(a, 3) == doctest::Approx(24));
  std::vector<double> b{0, 1, 1, 0};
  CHECK(determinant_in_place(b, 2) == doctest::Approx(-1));
}

TEST_CASE("containment agrees with Cramer's rule") {
  std::mt19937_64 rng(8);
  for (int d = 1; d <= 3; ++d) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto v = fixtures::random_points(rng, d + 1, d);
      const auto p = fixtures::random_points(rng, 1, d)[0];
      CHECK(point_in_simplex(p, Simplex{v}) == oracle::in_simplex(p, v));
    }
  }
}

TEST_CASE("affine maps preserve containment") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto v = fixtures::random_points(rng, 3, 2);
    const auto p = fixtures::random_points(rng, 1, 2)[0];
    // rotation-scale plus shear, well conditioned
    const double a = 1.5 + u(rng) * 0.3, b = u(rng) * 0.3, c = u(rng) * 0.3, e = 1.2 + u(rng) * 0.3;
    const double tx = u(rng) * 5, ty = u(rng) * 5;
    auto map = [&](const std::vector<double>& q) {
      return std::vector<double>{a * q[0] + b * q[1] + tx, c * q[0] + e * q[1] + ty};
    };
    Simplex s{v}, t;
    for (const auto& q : v) t.vertices.push_back(map(q));
    CHECK(point_in_simplex(p, s) == point_in_simplex(map(p), t));
  }
}
