#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fdepth/model.hpp"

namespace fdepth {

// Pointwise band of a set of univariate curves.
struct Envelope {
  std::vector<double> lower;
  std::vector<double> upper;
};

// Throws Error on an empty, duplicated or out-of-range index list, or on a
// multivariate sample.
Envelope envelope(const FunctionalSample& sample, std::span<const std::size_t> indices);

// Closed containment at every grid point; `tol` widens the band on both sides.
bool contains(const Envelope& env, std::span<const double> x, double tol = 0.0);

// Fraction of grid points at which x lies inside the band.
double containment_fraction(const Envelope& env, std::span<const double> x, double tol = 0.0);

// Normalized contribution of one band size j: count / (divisor * C(sample_size, j)).
// `divisor` is 1 for indicator counts and the grid length for relaxed counts.
double band_term(std::uint64_t count, std::size_t sample_size, std::size_t j, std::size_t divisor);

// Exact integer containment tallies behind band depth and modified band
// depth. A band never counts towards a curve it was built from; the
// normalizer is still C(sample_size, j).
struct BandTally {
  std::size_t sample_size = 0;
  std::size_t divisor = 1;
  int J = 2;
  // counts[i][j - 2]
  std::vector<std::vector<std::uint64_t>> counts;

  // S_n^j (indicator) or GS_n^j (relaxed) for curve i.
  double term(std::size_t i, int j) const;
  // Sum of term(i, j) over j = 2..J, accumulated in increasing j.
  double depth(std::size_t i) const;
};

// Tallies for every curve of the sample, enumerating each band once.
BandTally band_tally(const FunctionalSample& sample, const DepthParams& params);

// Band depth (relax = false) or modified band depth (relax = true) of every
// curve. Requires a univariate sample with n >= J + 1.
DepthResult band_depth(const FunctionalSample& sample, const DepthParams& params);

// Depth of curve `query` within the sample formed by `members` plus `query`.
// Bands are drawn from `members` only; if `query` is itself listed in
// `members`, bands containing it are skipped. When `visits` is set it is
// incremented by the number of member subsets enumerated.
double band_depth_within(const FunctionalSample& sample, std::span<const std::size_t> members,
                         std::size_t query, const DepthParams& params,
                         std::uint64_t* visits = nullptr);

}  // namespace fdepth
