#include <doctest.h>

#include <random>

#include "fdepth/band_depth.hpp"
#include "fdepth/depth.hpp"
#include "fdepth/error.hpp"
#include "fdepth/multivariate_depth.hpp"
#include "fdepth/pointcloud_depth.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fdepth;

TEST_CASE("centroid curve of three bivariate curves") {
  // curve 3 sits at the per-time centroid of curves 0..2
  const auto s = fixtures::multivariate({
      {{0, 0}, {1, 0}},
      {{3, 0}, {4, 1}},
      {{0, 3}, {1, 4}},
      {{1, 1}, {2, 5.0 / 3}},
  });
  const auto r = simplicial_band_depth(s, DepthParams{});
  CHECK(r.method == "simplicial_band_depth");
  CHECK(r.entries[3].depth == 0.25);
  DepthParams relax;
  relax.relax = true;
  const auto m = simplicial_band_depth(s, relax);
  CHECK(m.method == "modified_simplicial_band_depth");
  for (std::size_t i = 0; i < 4; ++i) CHECK(m.entries[i].depth >= r.entries[i].depth);
}

TEST_CASE("d = 1 reduces to band depth with J = 2") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto v = trial % 2 ? fixtures::random_integer_curves(rng, 6, 4) : fixtures::random_curves(rng, 6, 4);
    const auto s = fixtures::univariate(v);
    for (bool relax : {false, true}) {
      DepthParams p;
      p.relax = relax;
      p.tol = 0.0;
      const auto bd = fixtures::values(band_depth(s, p));
      const auto sbd = fixtures::values(simplicial_band_depth(as_multivariate(s), p));
      for (std::size_t i = 0; i < bd.size(); ++i) CHECK(sbd[i] == doctest::Approx(bd[i]).epsilon(1e-12));
    }
  }
}

TEST_CASE("one time point is simplicial depth of the slice") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const auto pts = fixtures::random_points(rng, 6, 2);
    std::vector<std::vector<std::vector<double>>> curves;
    for (const auto& p : pts) curves.push_back({p});
    DepthParams sp;
    sp.containment = Containment::simplex;
    CHECK(fixtures::values(simplicial_band_depth(fixtures::multivariate(curves), DepthParams{})) ==
          fixtures::values(simplicial_depth(PointCloud(pts), sp)));
  }
}

TEST_CASE("agrees with the naive enumerator") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const int T = 1 + static_cast<int>(rng() % 3);
    const auto v = fixtures::random_mcurves(rng, n, T, 2);
    for (bool relax : {false, true}) {
      DepthParams p;
      p.relax = relax;
      const auto got = fixtures::values(simplicial_band_depth(fixtures::multivariate(v), p));
      const auto want = oracle::simplicial_band_depth(v, relax);
      for (int i = 0; i < n; ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
    }
  }
}

TEST_CASE("per-time affine maps leave the depths unchanged") {
  std::mt19937_64 rng(34);
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  for (int trial = 0; trial < 20; ++trial) {
    auto v = fixtures::random_mcurves(rng, 6, 3, 2);
    auto w = v;
    for (int t = 0; t < 3; ++t) {
      const double a = 1.5 + u(rng), b = u(rng), c = u(rng), e = 1.2 + u(rng), tx = 10 * u(rng);
      for (auto& curve : w) {
        const auto q = curve[t];
        curve[t] = {a * q[0] + b * q[1] + tx, c * q[0] + e * q[1] - tx};
      }
    }
    for (bool relax : {false, true}) {
      DepthParams p;
      p.relax = relax;
      CHECK(fixtures::values(simplicial_band_depth(fixtures::multivariate(v), p)) ==
            fixtures::values(simplicial_band_depth(fixtures::multivariate(w), p)));
    }
  }
}

TEST_CASE("preconditions and dispatch") {
  const auto small = fixtures::multivariate({{{0, 0}}, {{1, 0}}, {{0, 1}}});
  CHECK_THROWS_AS(simplicial_band_depth(small, DepthParams{}), Error);
  const auto ragged = fixtures::multivariate({{{0, 0}}, {{1, 0, 2}}, {{0, 1}}, {{1, 1}}});
  CHECK_THROWS_AS(simplicial_band_depth(ragged, DepthParams{}), Error);

  DepthParams p;
  p.containment = Containment::simplex;
  const auto uni = compute_depth(fixtures::six_curves(), p);
  CHECK(uni.method == "simplicial_band_depth");
  p.containment = Containment::oja;
  CHECK_THROWS_AS(compute_depth(fixtures::six_curves(), p), Error);
}

TEST_CASE("depth within ignores duplicate ids") {
  std::mt19937_64 rng(35);
  const auto s = fixtures::multivariate(fixtures::random_mcurves(rng, 5, 2, 2));
  const auto twice = s.concat(s);
  std::vector<std::size_t> members{0, 1, 2, 3, 4};
  const auto full = fixtures::values(simplicial_band_depth(s, DepthParams{}));
  // query is a copy of member 2, which stays in the member list
  const double d = simplicial_band_depth_within(twice, members, 7, DepthParams{});
  CHECK(d >= 0.0);
  std::uint64_t visits = 0;
  CHECK(simplicial_band_depth_within(s, members, 2, DepthParams{}, &visits) == full[2]);
  CHECK(visits == 10);
}
